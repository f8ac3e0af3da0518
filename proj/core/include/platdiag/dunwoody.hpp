#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platdiag/curves.hpp"
#include "platdiag/word.hpp"

namespace pd {

struct DunwoodyTuple {
    int a = 0, b = 0, c = 0, n = 1;
    int r = 0;  // mod d
    int s = 0;  // mod n
    int d() const { return 2 * a + b + c; }
    std::string str() const;
};

// Validates a+b+c > 0, n >= 1, nonnegative a,b,c; reduces r mod d, s mod n.
DunwoodyTuple make_dunwoody(long long a, long long b, long long c, long long n, long long r, long long s);
// "a,b,c,n,r,s"
DunwoodyTuple parse_dunwoody(const std::string& text);

enum class DArc : std::uint8_t { AU, AL, B, C };

// forward means the arrow direction of the dictionary: right-to-left for A
// arcs (D_i to D_{i-1}), downward for B and C arcs.
struct DArcRef {
    DArc type;
    bool forward;
    int i;  // 1..n
    friend bool operator==(const DArcRef&, const DArcRef&) = default;
};
std::string to_string(const DArcRef& a);

struct DunwoodyDiagram {
    DunwoodyTuple t;
    SlotGraph graph;
    std::vector<DArcRef> rec;  // what a curve records when leaving through a slot

    // Slots of D_i^u are (0,i,pos), of D_i^d are (1,i,pos); disk index 0-based.
    int slot(bool lower, int disk, int pos) const { return ((lower ? t.n : 0) + disk) * t.d() + pos; }
    bool lower(int slot) const { return slot / t.d() >= t.n; }
    int disk(int slot) const { return (slot / t.d()) % t.n; }
    int pos(int slot) const { return slot % t.d(); }
    int label(int slot) const;  // 1..d
};

DunwoodyDiagram build_graph(const DunwoodyTuple& t);

struct CurveSystem {
    std::vector<Curve> curves;  // all cycles
    int m = 0;
    // e_1..e_n, each starting at label a+b+1 of D_i^u. Empty unless the n
    // start slots lie on n distinct curves.
    std::vector<Curve> e;
};

CurveSystem glue_and_extract(const DunwoodyDiagram& d);

Word dict_word(const DArcRef& a, int n, int s);
// Reading of a curve through the dictionary, freely reduced. Context (g=n, 1).
Word curve_to_word(const DunwoodyDiagram& d, const Curve& c);
std::vector<DArcRef> curve_arcs(const DunwoodyDiagram& d, const Curve& c);

struct AdmissibilityReport {
    bool admissible = false;
    int m = 0;
    int components = 0;  // pieces of the surface cut along all curves
    int rank = 0;        // Z/2 rank of the curve classes, m - components + 1
    int word_rank = 0;   // Z/2 rank of the exponent vectors of the curve words
};
// Pieces of the Heegaard surface cut along every curve of the diagram.
int complement_components(const DunwoodyDiagram& d);
// m = n and the curves do not separate the surface.
AdmissibilityReport is_admissible(const DunwoodyTuple& t);

// e_1..e_n as words; throws InputError if t is not admissible.
std::vector<Word> psl_set(const DunwoodyTuple& t);

int compute_s_bar(int a, int n, int r);

}  // namespace pd
