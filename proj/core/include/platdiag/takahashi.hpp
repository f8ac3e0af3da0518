#pragma once

#include <string>
#include <vector>

#include "platdiag/curves.hpp"
#include "platdiag/homology.hpp"
#include "platdiag/word.hpp"

namespace pd {

enum class TakCase : std::uint8_t { PgtQ_RgtS, PltQ_RltS, PgtQ_RltS, PltQ_RgtS };
const char* case_name(TakCase c);

// T_n(p/q, r/s), coefficients repeating along the 2n-component chain.
struct TakahashiParams {
    int n = 1;
    int p = 0, q = 1, r = 0, s = 1;
    TakCase tag() const;
    std::string str() const;
};

// gcd(p,q) = gcd(r,s) = 1, all nonnegative, p/q != 1, r/s != 1.
TakahashiParams make_takahashi(long long n, long long p, long long q, long long r, long long s);
// Parses "P/Q"
std::pair<long long, long long> parse_ratio(const std::string& text);

enum class TArc : std::uint8_t { AU, AL, B, C, F, G, X, Y };

// forward is the right-pointing (or downward, for C) arrow.
struct TArcRef {
    TArc type;
    bool forward;
    int i;  // 1..2n
    friend bool operator==(const TArcRef&, const TArcRef&) = default;
};
std::string to_string(const TArcRef& a);
TArcRef parse_tarc(const std::string& text);  // "->B1", "<-F2", "vC1", "^C3"

// Parity: AU, AL, F even; B, G, X, Y odd; C either (odd in the r<s family,
// even for the vertical arcs that appear when r>s).
Word tak_dict_word(const TArcRef& a, int n);

struct TakahashiDiagram {
    TakahashiParams t;
    SlotGraph graph;
    std::vector<TArcRef> rec;
    // disk k = 0..4n-1: k < 2n is D_{k+1}^u, else D_{k-2n+1}^d
    std::vector<int> first;  // first slot of each disk, plus total at the end
    int disk_of(int slot) const;
    int pos(int slot) const { return slot - first[disk_of(slot)]; }
    int nslots(int disk) const { return first[disk + 1] - first[disk]; }
    int label(int slot) const;
};

TakahashiDiagram build_diagram(const TakahashiParams& t);

struct TakahashiCurves {
    std::vector<Curve> curves;  // all cycles
    // e_1..e_n (p/q curves around the odd handles), e_{n+1}..e_{2n} (r/s
    // curves around the even handles). Empty if the anchors collide.
    std::vector<Curve> e;
};
TakahashiCurves tak_extract(const TakahashiDiagram& d);

std::vector<TArcRef> tak_curve_arcs(const TakahashiDiagram& d, const Curve& c);
Word tak_curve_to_word(const TakahashiDiagram& d, const Curve& c);
std::vector<Word> tak_psl_set(const TakahashiParams& t);

// Cokernel of the linking matrix of the chain link with the surgery
// coefficients on the diagonal.
IntMatrix surgery_matrix(const TakahashiParams& t);
HomologyResult takahashi_surgery_h1(const TakahashiParams& t);

}  // namespace pd
