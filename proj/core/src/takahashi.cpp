#include "platdiag/takahashi.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace pd {

namespace {

int mod(long long x, long long m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

const char* case_name(TakCase c) {
    switch (c) {
        case TakCase::PgtQ_RgtS: return "p>q,r>s";
        case TakCase::PltQ_RltS: return "p<q,r<s";
        case TakCase::PgtQ_RltS: return "p>q,r<s";
        case TakCase::PltQ_RgtS: return "p<q,r>s";
    }
    return "?";
}

TakCase TakahashiParams::tag() const {
    if (p > q) return r > s ? TakCase::PgtQ_RgtS : TakCase::PgtQ_RltS;
    return r > s ? TakCase::PltQ_RgtS : TakCase::PltQ_RltS;
}

std::string TakahashiParams::str() const {
    return "T_" + std::to_string(n) + "(" + std::to_string(p) + "/" + std::to_string(q) + ", " +
           std::to_string(r) + "/" + std::to_string(s) + ")";
}

TakahashiParams make_takahashi(long long n, long long p, long long q, long long r, long long s) {
    if (n < 1) throw InputError("need n >= 1");
    if (p < 0 || q < 0 || r < 0 || s < 0) throw InputError("negative surgery coefficients are not supported");
    if (n > 10000 || p > 10000 || q > 10000 || r > 10000 || s > 10000) throw InputError("parameters too large");
    if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) throw InputError("need gcd(p,q) = gcd(r,s) = 1");
    if (p == q || r == s) throw InputError("coefficient 1 is not supported");
    return {static_cast<int>(n), static_cast<int>(p), static_cast<int>(q), static_cast<int>(r), static_cast<int>(s)};
}

std::pair<long long, long long> parse_ratio(const std::string& text) {
    auto sl = text.find('/');
    auto num = [&](const std::string& x) {
        if (x.empty() || x.size() > 9 || !std::all_of(x.begin(), x.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("bad ratio '" + text + "' (expected P/Q with nonnegative integers)");
        return std::stoll(x);
    };
    if (sl == std::string::npos) throw InputError("bad ratio '" + text + "' (expected P/Q)");
    return {num(text.substr(0, sl)), num(text.substr(sl + 1))};
}

static const char* tarc_name(TArc t) {
    static const char* nm[] = {"AU", "AL", "B", "C", "F", "G", "X", "Y"};
    return nm[static_cast<int>(t)];
}

std::string to_string(const TArcRef& a) {
    std::string arrow = a.type == TArc::C ? (a.forward ? "v" : "^") : (a.forward ? "->" : "<-");
    return arrow + tarc_name(a.type) + std::to_string(a.i);
}

TArcRef parse_tarc(const std::string& text) {
    std::string s = text;
    bool fw;
    if (s.rfind("->", 0) == 0) fw = true, s = s.substr(2);
    else if (s.rfind("<-", 0) == 0) fw = false, s = s.substr(2);
    else if (s.rfind("v", 0) == 0) fw = true, s = s.substr(1);
    else if (s.rfind("^", 0) == 0) fw = false, s = s.substr(1);
    else throw InputError("bad arc '" + text + "'");
    for (int t = 0; t < 8; ++t) {
        std::string nm = tarc_name(static_cast<TArc>(t));
        if (s.rfind(nm, 0) == 0 && s.size() > nm.size() &&
            std::all_of(s.begin() + static_cast<long>(nm.size()), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return {static_cast<TArc>(t), fw, std::stoi(s.substr(nm.size()))};
        }
    }
    throw InputError("bad arc '" + text + "'");
}

Word tak_dict_word(const TArcRef& a, int n) {
    const Context cx{2 * n, 1};
    const int k = a.i;
    const bool even = mod(k, 2) == 0;
    auto parity = [&](bool want_even) {
        if (even != want_even) throw InputError("arc " + to_string(a) + " has the wrong index parity");
    };
    std::vector<Letter> v;
    switch (a.type) {
        case TArc::AU:
            parity(true);
            v = a.forward ? std::vector{bet(k + 1, -1), alp(k + 1)} : std::vector{bet(k + 1), alp(k)};
            break;
        case TArc::AL:
            parity(true);
            v = {a.forward ? alp(k + 1, -1) : alp(k, -1)};
            break;
        case TArc::B:
            parity(false);
            v = {a.forward ? alp(k + 1, -1) : alp(k)};
            break;
        case TArc::C:
            v = {a.forward ? alp(k, -1) : alp(k)};
            break;
        case TArc::F:
            // ->F = [a_{k+1}, b_{k+1}] b_{k+2}^-1 a_{k+2},  <-F = b_k [b_{k-1}, a_{k-1}] a_{k-2}
            parity(true);
            if (a.forward)
                v = {alp(k + 1, -1), bet(k + 1, -1), alp(k + 1), bet(k + 1), bet(k + 2, -1), alp(k + 2)};
            else
                v = {bet(k), bet(k - 1, -1), alp(k - 1, -1), bet(k - 1), alp(k - 1), alp(k - 2)};
            break;
        case TArc::G:
            parity(false);
            v = a.forward ? std::vector{bet(k + 1, -1), bet(k + 2, -1), alp(k + 2)}
                          : std::vector{bet(k), bet(k - 1), alp(k - 2)};
            break;
        case TArc::X:
            parity(false);
            v = a.forward ? std::vector{bet(k + 2, -1), alp(k + 3, -1)} : std::vector{bet(k, -1), alp(k - 1, -1)};
            break;
        case TArc::Y:
            parity(false);
            v = {a.forward ? alp(k + 2, -1) : alp(k - 2, -1)};
            break;
    }
    return free_reduce(Word(cx, std::move(v)));
}

namespace {

enum Bun { bAU, bFp, bFm, bV, bGp, bB, bC, bGm, bAL, bXp, bXm, bYp, bYm, bCount };

struct Mult {
    std::array<int, bCount> k{};
    int de = 0, dodd = 0;  // label offsets of the even and odd lower disks
};

Mult multiplicities(const TakahashiParams& t) {
    const int p = t.p, q = t.q, r = t.r, s = t.s;
    Mult m;
    auto& k = m.k;
    k[bAU] = std::min(r, s);
    k[bAL] = std::min(p, q);
    k[bB] = std::min(p, q) + std::min(r, s);
    k[bC] = std::max(p - q, 0);
    k[bFp] = k[bFm] = q;
    k[bGp] = k[bGm] = std::max(s - r, 0);
    k[bXp] = k[bXm] = std::max(q - p, 0);
    k[bYp] = k[bYm] = s;
    k[bV] = std::max(r - s, 0);
    m.de = std::min(p, q) + k[bV];
    m.dodd = std::min(p, q) + k[bGp];
    return m;
}

// cyclic bundle order on each disk type
const std::vector<Bun> kUe = {bAU, bFp, bFm, bV};
const std::vector<Bun> kUo = {bAU, bGp, bB, bC, bGm};
const std::vector<Bun> kLe = {bB, bV, bXp, bAL, bXm};
const std::vector<Bun> kLo = {bAL, bYm, bYp, bC};

const std::vector<Bun>& layout(bool lower, bool even) {
    return lower ? (even ? kLe : kLo) : (even ? kUe : kUo);
}

struct Link {
    bool lower;
    int dJ;     // handle offset of the partner disk
    Bun other;  // partner bundle
    TArc type;
    bool forward;
    int dI;     // recorded index offset
    bool rev;   // partner order reversed
};

Link link(bool lower, bool even, Bun b) {
    if (!lower && even) {
        switch (b) {
            case bAU: return {false, 1, bAU, TArc::AU, true, 0, false};
            case bV: return {true, 0, bV, TArc::C, true, 0, false};
            case bFp: return {false, 2, bFm, TArc::F, true, 0, true};
            case bFm: return {false, -2, bFp, TArc::F, false, 0, true};
            default: break;
        }
    } else if (!lower) {
        switch (b) {
            case bAU: return {false, -1, bAU, TArc::AU, false, -1, false};
            case bGp: return {false, 2, bGm, TArc::G, true, 0, true};
            case bB: return {true, 1, bB, TArc::B, true, 0, true};
            case bC: return {true, 0, bC, TArc::C, true, 0, false};
            case bGm: return {false, -2, bGp, TArc::G, false, 0, true};
            default: break;
        }
    } else if (even) {
        switch (b) {
            case bAL: return {true, 1, bAL, TArc::AL, true, 0, false};
            case bV: return {false, 0, bV, TArc::C, false, 0, false};
            case bB: return {false, -1, bB, TArc::B, false, -1, true};
            case bXp: return {true, 2, bXm, TArc::X, true, -1, true};
            case bXm: return {true, -2, bXp, TArc::X, false, -1, true};
            default: break;
        }
    } else {
        switch (b) {
            case bAL: return {true, -1, bAL, TArc::AL, false, -1, false};
            case bC: return {false, 0, bC, TArc::C, false, 0, false};
            case bYp: return {true, 2, bYm, TArc::Y, true, 0, true};
            case bYm: return {true, -2, bYp, TArc::Y, false, 0, true};
            default: break;
        }
    }
    throw InternalError("bundle not on this disk type");
}

int bundle_start(const Mult& m, bool lower, bool even, Bun b) {
    int x = 0;
    for (Bun y : layout(lower, even)) {
        if (y == b) return x;
        x += m.k[y];
    }
    throw InternalError("bundle not on this disk type");
}

}  // namespace

int TakahashiDiagram::disk_of(int slot) const {
    auto it = std::upper_bound(first.begin(), first.end(), slot);
    return static_cast<int>(it - first.begin()) - 1;
}

int TakahashiDiagram::label(int slot) const {
    const int g = 2 * t.n;
    const int dk = disk_of(slot);
    const int v = nslots(dk);
    if (dk < g) return pos(slot) + 1;
    Mult m = multiplicities(t);
    const bool even = (dk - g + 1) % 2 == 0;
    return mod(pos(slot) - (even ? m.de : m.dodd), v) + 1;
}

TakahashiDiagram build_diagram(const TakahashiParams& t) {
    TakahashiDiagram D;
    D.t = t;
    const int g = 2 * t.n;
    const Mult m = multiplicities(t);
    auto disk = [g](bool lower, int J) { return (lower ? g : 0) + mod(J - 1, g); };
    D.first.assign(2 * g + 1, 0);
    for (int dk = 0; dk < 2 * g; ++dk) {
        bool lower = dk >= g, even = (dk % g + 1) % 2 == 0;
        int v = 0;
        for (Bun b : layout(lower, even)) v += m.k[b];
        D.first[dk + 1] = D.first[dk] + v;
    }
    const int N = D.first.back();
    auto& G = D.graph;
    G.across.assign(N, -1);
    G.glue.assign(N, -1);
    G.arc_of.assign(N, -1);
    D.rec.assign(N, TArcRef{TArc::AU, true, 0});

    for (int dk = 0; dk < 2 * g; ++dk) {
        const bool lower = dk >= g;
        const int J = dk % g + 1;
        const bool even = J % 2 == 0;
        for (Bun b : layout(lower, even)) {
            const int k = m.k[b];
            if (!k) continue;
            Link L = link(lower, even, b);
            const int od = disk(L.lower, J + L.dJ);
            const bool oeven = (od % g + 1) % 2 == 0;
            const int P = D.first[dk] + bundle_start(m, lower, even, b);
            const int Q = D.first[od] + bundle_start(m, L.lower, oeven, L.other);
            const TArcRef rec{L.type, L.forward, wrap_index(J + L.dI, g)};
            for (int j = 0; j < k; ++j) {
                G.across[P + j] = Q + (L.rev ? k - 1 - j : j);
                D.rec[P + j] = rec;
            }
        }
    }
    int arc = 0;
    for (int x = 0; x < N; ++x) {
        if (G.across[x] < 0 || G.across[G.across[x]] != x) throw InternalError("Takahashi arcs do not pair up");
        if (G.arc_of[x] < 0) G.arc_of[x] = G.arc_of[G.across[x]] = arc++;
    }
    G.arc_count = arc;
    // D_J^u and D_J^d: upper position u meets lower position u + offset
    for (int J = 1; J <= g; ++J) {
        const int U = disk(false, J), Lw = disk(true, J);
        const int v = D.nslots(U);
        if (v != D.nslots(Lw)) throw InternalError("glued disks have different vertex counts");
        const int off = J % 2 == 0 ? m.de : m.dodd;
        for (int u = 0; u < v; ++u) {
            int a = D.first[U] + u, b = D.first[Lw] + mod(u + off, v);
            G.glue[a] = b;
            G.glue[b] = a;
        }
    }
    return D;
}

TakahashiCurves tak_extract(const TakahashiDiagram& D) {
    TakahashiCurves out;
    out.curves = all_curves(D.graph);
    const TakahashiParams& t = D.t;
    const int n = t.n;
    const Mult m = multiplicities(t);
    auto last_of = [&](int J, Bun b) {
        const int dk = J - 1;
        return D.first[dk] + bundle_start(m, false, J % 2 == 0, b) + m.k[b] - 1;
    };
    std::vector<char> taken(out.curves.size(), 0);
    std::vector<Curve> e;
    for (int fam = 0; fam < 2; ++fam) {
        for (int k = 1; k <= n; ++k) {
            const int Jo = 2 * k - 1, Je = 2 * k;
            int anchor;
            if (fam == 0) anchor = t.q > 0 ? last_of(Je, bFm) : last_of(Jo, bC);
            else if (m.k[bAU] > 0) anchor = last_of(Je, bAU);
            else if (m.k[bGp] > 0) anchor = last_of(Jo, bGp);
            else anchor = last_of(Je, bV);
            int idx = curve_through(D.graph, out.curves, anchor);
            if (idx < 0 || taken[idx]) return out;
            taken[idx] = 1;
            Curve c = trace(D.graph, anchor);
            // start at the last slot leaving the curve's own handle downward or through B / A^U
            const int home = fam == 0 ? Jo - 1 : Je - 1;
            long best = -1;
            std::size_t at = 0;
            for (std::size_t x = 0; x < c.size(); ++x) {
                const int sl = c[x];
                if (D.disk_of(sl) != home) continue;
                const TArcRef& r = D.rec[sl];
                bool ok = r.forward && (fam == 0 ? (r.type == TArc::B || r.type == TArc::C)
                                                 : (r.type == TArc::AU || r.type == TArc::C));
                if (ok && D.pos(sl) > best) best = D.pos(sl), at = x;
            }
            e.push_back(rotated(c, at));
        }
    }
    out.e = std::move(e);
    return out;
}

std::vector<TArcRef> tak_curve_arcs(const TakahashiDiagram& D, const Curve& c) {
    std::vector<TArcRef> v;
    for (int x : c) v.push_back(D.rec[x]);
    return v;
}

Word tak_curve_to_word(const TakahashiDiagram& D, const Curve& c) {
    Word w({2 * D.t.n, 1});
    for (int x : c) w = concat(w, tak_dict_word(D.rec[x], D.t.n));
    return w;
}

std::vector<Word> tak_psl_set(const TakahashiParams& t) {
    TakahashiDiagram D = build_diagram(t);
    TakahashiCurves cs = tak_extract(D);
    if (static_cast<int>(cs.curves.size()) != 2 * t.n || cs.e.empty())
        throw InternalError(t.str() + ": diagram does not give 2n indexed curves");
    std::vector<Word> out;
    for (auto& c : cs.e) out.push_back(tak_curve_to_word(D, c));
    return out;
}

IntMatrix surgery_matrix(const TakahashiParams& t) {
    const int g = 2 * t.n;
    IntMatrix A(g, std::vector<BigInt>(g, 0));
    // edge (i, i+1) of the chain carries linking sign (-1)^i
    auto eps = [g](int i) { return mod(i, g) % 2 == 0 ? 1 : -1; };
    for (int i = 0; i < g; ++i) {
        const int num = i % 2 == 0 ? t.p : t.r;
        const int den = i % 2 == 0 ? t.q : t.s;
        A[i][i] += num;
        A[i][mod(i + 1, g)] += den * eps(i);
        A[i][mod(i - 1, g)] += den * eps(i - 1);
    }
    return A;
}

HomologyResult takahashi_surgery_h1(const TakahashiParams& t) {
    return cokernel(surgery_matrix(t), 2 * t.n);
}

}  // namespace pd
