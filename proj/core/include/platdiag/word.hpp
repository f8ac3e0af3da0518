#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platdiag/errors.hpp"

namespace pd {

enum class Gen : std::uint8_t { Sigma, Alpha, Beta };

struct Letter {
    Gen kind;
    int index;
    std::int64_t exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Genus g of the surface, n = half the strand count.
struct Context {
    int g = 0;
    int n = 1;
    friend bool operator==(const Context&, const Context&) = default;
};

// Element of the surface braid group on 2n strands, stored as a letter sequence.
// Alpha/Beta indices are reduced mod g into [1,g] on construction; Sigma
// indices are checked against [1, 2n-1]. Letters are kept as given (use
// free_reduce for the reduced form).
class Word {
public:
    Word() = default;
    explicit Word(Context ctx) : ctx_(ctx) {}
    Word(Context ctx, std::vector<Letter> letters);

    const Context& context() const { return ctx_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    bool sigma_free() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    Context ctx_{};
    std::vector<Letter> letters_;
};

// Shorthands for building words in code. Indices are normalized by Word.
inline Letter sig(int i, std::int64_t e = 1) { return {Gen::Sigma, i, e}; }
inline Letter alp(int j, std::int64_t e = 1) { return {Gen::Alpha, j, e}; }
inline Letter bet(int j, std::int64_t e = 1) { return {Gen::Beta, j, e}; }

int wrap_index(long long i, int g);  // i mod g into [1,g]

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
// Reinterpret an Alpha/Beta-only word in another strand context.
Word with_context(const Word& w, Context ctx);
// Add k to every Alpha/Beta index (mod g). Sigma letters are untouched.
Word shift_indices(const Word& w, int k);

struct ExponentVector {
    std::vector<std::int64_t> v;  // alpha_1..alpha_g, beta_1..beta_g
    bool had_sigma = false;
};
ExponentVector exponent_vector(const Word& w);

// T_k : B_{g,2n} -> B_{g,2n+2}
Word stabilize_Tk(const Word& w, int k);
// Inverse of T_k on its image; throws InputError if w is not of the form T_k(u).
Word destabilize_Tk(const Word& w, int k);

enum class Move : std::uint8_t { M1, M2, M3, M4, M5, M6, PslStar, Psl };
enum class Side : std::uint8_t { Left, Right };

struct MoveSpec {
    Move move = Move::M1;
    Side side = Side::Right;
    int param = 0;
    bool invert = false;
};

// psl_words[i-1] is the representative of d_i used by Psl with param i.
Word apply_move(const Word& w, const MoveSpec& m, const std::vector<Word>* psl_words = nullptr);

// Text form: "a1 b2^-1 s3", empty word "1".
std::string to_string(const Word& w);
std::string to_string(const Letter& l);
Word parse_word(std::string_view text, Context ctx);
// "M1:right", "M4:left:2", "M6:1:inv", "Psl:3", "PslStar:2"
MoveSpec parse_move(std::string_view text);
std::string to_string(const MoveSpec& m);
const char* move_name(Move m);

}  // namespace pd
