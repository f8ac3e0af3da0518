#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "platdiag/word.hpp"

namespace pd {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Relators over x_1..x_g, stored as Alpha-only words in context (g, 0).
struct Presentation {
    int g = 0;
    std::vector<Word> relators;
};

std::string to_string(const Presentation& p);

// Delete Beta letters and rename alpha_j to x_j.
Presentation presentation_from_psl(const std::vector<Word>& words, int g);

// Diagonal of the Smith normal form, length min(rows, cols), nonnegative,
// each entry dividing the next (zeros last).
std::vector<BigInt> smith_normal_form(IntMatrix m);

struct HomologyResult {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // entries >= 2, d1 | d2 | ...
    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
    BigInt torsion_order() const;
};

// "Z^3", "Z/2 + Z/22", "Z + Z/5", "0"
std::string to_string(const HomologyResult& h);

// Cokernel of the relation matrix (one row per relator, g columns).
HomologyResult cokernel(const IntMatrix& rows, int g);
HomologyResult h1_from_presentation(const Presentation& p);
HomologyResult h1_from_words(const std::vector<Word>& psl, int g);

int z2_rank(std::vector<std::vector<std::int64_t>> rows);

}  // namespace pd
