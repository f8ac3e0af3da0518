#include "platdiag/dunwoody.hpp"

#include <numeric>
#include <sstream>

#include "platdiag/homology.hpp"

namespace pd {

namespace {

int mod(long long x, long long m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

std::string DunwoodyTuple::str() const {
    std::ostringstream o;
    o << a << ',' << b << ',' << c << ',' << n << ',' << r << ',' << s;
    return o.str();
}

DunwoodyTuple make_dunwoody(long long a, long long b, long long c, long long n, long long r, long long s) {
    if (a < 0 || b < 0 || c < 0) throw InputError("a, b, c must be nonnegative");
    if (a + b + c <= 0) throw InputError("need a+b+c > 0");
    if (n < 1) throw InputError("need n >= 1");
    if (a > 10000 || b > 10000 || c > 10000 || n > 10000) throw InputError("parameters too large");
    DunwoodyTuple t;
    t.a = static_cast<int>(a);
    t.b = static_cast<int>(b);
    t.c = static_cast<int>(c);
    t.n = static_cast<int>(n);
    t.r = mod(r, t.d());
    t.s = mod(s, t.n);
    return t;
}

DunwoodyTuple parse_dunwoody(const std::string& text) {
    std::vector<long long> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long x = std::stoll(item, &used);
            if (used != item.size()) throw InputError("");
            v.push_back(x);
        } catch (const std::exception&) {
            throw InputError("bad tuple entry '" + item + "' (expected integers a,b,c,n,r,s)");
        }
    }
    if (v.size() != 6) throw InputError("tuple needs 6 integers a,b,c,n,r,s");
    return make_dunwoody(v[0], v[1], v[2], v[3], v[4], v[5]);
}

std::string to_string(const DArcRef& a) {
    std::string s;
    switch (a.type) {
        case DArc::AU: s = a.forward ? "->AU" : "<-AU"; break;
        case DArc::AL: s = a.forward ? "->AL" : "<-AL"; break;
        case DArc::B: s = a.forward ? "vB" : "^B"; break;
        case DArc::C: s = a.forward ? "vC" : "^C"; break;
    }
    return s + std::to_string(a.i);
}

int DunwoodyDiagram::label(int sl) const {
    // upper disks run clockwise from label 1; lower ones counterclockwise, shifted by r
    return lower(sl) ? mod(pos(sl) - t.r, t.d()) + 1 : pos(sl) + 1;
}

// Position layout. Upper: [to D_{i-1}^u | diagonal | vertical | to D_{i+1}^u].
// Lower: [to D_{i-1}^d | vertical | diagonal | to D_{i+1}^d].
DunwoodyDiagram build_graph(const DunwoodyTuple& t) {
    DunwoodyDiagram D;
    D.t = t;
    const int n = t.n, d = t.d(), a = t.a, b = t.b, c = t.c;
    const int N = 2 * n * d;
    auto& G = D.graph;
    G.across.assign(N, -1);
    G.glue.assign(N, -1);
    G.arc_of.assign(N, -1);
    D.rec.assign(N, DArcRef{DArc::AU, true, 0});

    const int uUm = 0, uB = a, uC = a + b, uUp = a + b + c;
    const int lLm = 0, lC = a, lB = a + c, lLp = a + c + b;
    int arc = 0;
    auto join = [&](int x, int y, DArcRef rx, DArcRef ry) {
        G.across[x] = y;
        G.across[y] = x;
        G.arc_of[x] = G.arc_of[y] = arc++;
        D.rec[x] = rx;
        D.rec[y] = ry;
    };
    for (int i = 0; i < n; ++i) {
        const int I = i + 1, nx = (i + 1) % n, pv = mod(i - 1, n);
        // parallel bundles between neighbours on the same row come out reversed
        for (int j = 0; j < a; ++j)
            join(D.slot(false, i, uUp + j), D.slot(false, nx, uUm + a - 1 - j),
                 {DArc::AU, false, I}, {DArc::AU, true, nx + 1});
        for (int j = 0; j < a; ++j)
            join(D.slot(true, i, lLp + j), D.slot(true, nx, lLm + a - 1 - j),
                 {DArc::AL, false, I}, {DArc::AL, true, nx + 1});
        for (int j = 0; j < c; ++j)
            join(D.slot(false, i, uC + j), D.slot(true, i, lC + j), {DArc::C, true, I}, {DArc::C, false, I});
        for (int j = 0; j < b; ++j)
            join(D.slot(false, i, uB + j), D.slot(true, pv, lB + j), {DArc::B, true, I}, {DArc::B, false, pv + 1});
    }
    G.arc_count = arc;
    // D_i^u is glued to D_{i+s}^d, equal labels matched
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < d; ++p) {
            int u = D.slot(false, i, p);
            int l = D.slot(true, (i + t.s) % n, mod(p + t.r, d));
            G.glue[u] = l;
            G.glue[l] = u;
        }
    for (int x = 0; x < N; ++x)
        if (G.across[x] < 0 || G.glue[x] < 0) throw InternalError("unmatched slot in Dunwoody diagram");
    return D;
}

CurveSystem glue_and_extract(const DunwoodyDiagram& D) {
    CurveSystem cs;
    cs.curves = all_curves(D.graph);
    cs.m = static_cast<int>(cs.curves.size());
    const int n = D.t.n, d = D.t.d();
    const int start = (D.t.a + D.t.b) % d;
    std::vector<char> taken(cs.curves.size(), 0);
    std::vector<Curve> e;
    for (int i = 0; i < n; ++i) {
        int sl = D.slot(false, i, start);
        int k = curve_through(D.graph, cs.curves, sl);
        if (k < 0) throw InternalError("start slot on no curve");
        if (taken[k]) return cs;
        taken[k] = 1;
        e.push_back(trace(D.graph, sl));
    }
    cs.e = std::move(e);
    return cs;
}

namespace {

Word w_run(int i, int n, int s) {
    int L = mod(n - s, n);
    std::vector<Letter> v;
    for (int j = 0; j < L; ++j) v.push_back(bet(i + j));
    return Word({n, 1}, std::move(v));
}

}  // namespace

Word dict_word(const DArcRef& a, int n, int s) {
    if (a.i < 1 || a.i > n) throw InternalError("arc index out of range");
    const Context cx{n, 1};
    const int i = a.i;
    switch (a.type) {
        case DArc::AU:
            return a.forward ? Word(cx, {bet(i - 1, -1), alp(i - 1)}) : Word(cx, {bet(i), alp(i + 1)});
        case DArc::AL:
            return a.forward ? Word(cx, {alp(i - s - 1, -1)}) : Word(cx, {alp(i - s + 1, -1)});
        case DArc::C:
            return a.forward ? concat(w_run(i, n, s), Word(cx, {alp(i + n - s, -1)}))
                             : concat(invert(w_run(i, n, s)), Word(cx, {alp(i)}));
        case DArc::B:
            // a diagonal arc reads as a vertical arc with gluing parameter s+1
            return a.forward ? dict_word({DArc::C, true, i}, n, mod(s + 1, n))
                             : dict_word({DArc::C, false, wrap_index(i + 1, n)}, n, mod(s + 1, n));
    }
    throw InternalError("unknown arc type");
}

std::vector<DArcRef> curve_arcs(const DunwoodyDiagram& D, const Curve& c) {
    std::vector<DArcRef> v;
    v.reserve(c.size());
    for (int x : c) v.push_back(D.rec[x]);
    return v;
}

Word curve_to_word(const DunwoodyDiagram& D, const Curve& c) {
    Word w({D.t.n, 1});
    for (int x : c) w = concat(w, dict_word(D.rec[x], D.t.n, D.t.s));
    return w;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void join(int x, int y) { p[find(x)] = find(y); }
    int classes() {
        int k = 0;
        for (int i = 0; i < static_cast<int>(p.size()); ++i) k += find(i) == i;
        return k;
    }
};

}  // namespace

int complement_components(const DunwoodyDiagram& D) {
    const auto& G = D.graph;
    const int N = G.size(), n = D.t.n, d = D.t.d();
    // rotation around a disk: upper disks run up in position, lower ones down
    auto turn = [&](int x) {
        int step = D.lower(x) ? d - 1 : 1;
        return x - D.pos(x) + (D.pos(x) + step) % d;
    };
    // faces of the planar graph; the corner after x belongs to face[turn(x)]
    std::vector<int> face(N, -1);
    int F = 0;
    for (int x = 0; x < N; ++x) {
        if (face[x] >= 0) continue;
        for (int y = x; face[y] < 0; y = turn(G.across[y])) face[y] = F;
        ++F;
    }
    Dsu comp(2 * n);
    for (int x = 0; x < N; ++x) comp.join(x / d, G.across[x] / d);
    if (2 * n - G.arc_count + F != 2 * comp.classes()) throw InternalError("diagram is not planar");

    Dsu region(F);
    auto corner = [&](int x) { return face[turn(x)]; };
    const int a = D.t.a;
    // pieces of the graph that share no arc still share the outer region
    if (a == 0)
        for (int i = 0; i + 1 < n; ++i) region.join(corner(D.slot(false, i, d - 1)), corner(D.slot(false, i + 1, d - 1)));
    if (D.t.b == 0 && D.t.c == 0) region.join(corner(D.slot(false, 0, a - 1)), corner(D.slot(true, 0, a)));
    // a corner of D_i^u and the matching corner of its partner are one region
    for (int x = 0; x < N; ++x) {
        if (D.lower(x)) continue;
        int gx = G.glue[x], gy = G.glue[turn(x)];
        if (turn(gy) != gx) throw InternalError("gluing does not preserve corners");
        region.join(corner(x), corner(gy));
    }
    return region.classes();
}

AdmissibilityReport is_admissible(const DunwoodyTuple& t) {
    AdmissibilityReport rep;
    DunwoodyDiagram D = build_graph(t);
    CurveSystem cs = glue_and_extract(D);
    rep.m = cs.m;
    rep.components = complement_components(D);
    rep.rank = rep.m - rep.components + 1;
    std::vector<std::vector<std::int64_t>> rows;
    for (auto& c : cs.curves) rows.push_back(exponent_vector(curve_to_word(D, c)).v);
    rep.word_rank = z2_rank(rows);
    rep.admissible = rep.m == t.n && rep.components == 1;
    return rep;
}

std::vector<Word> psl_set(const DunwoodyTuple& t) {
    AdmissibilityReport rep = is_admissible(t);
    if (!rep.admissible)
        throw InputError("tuple " + t.str() + " is not admissible (m=" + std::to_string(rep.m) + ", n=" +
                         std::to_string(t.n) + ", complement pieces=" + std::to_string(rep.components) + ")");
    DunwoodyDiagram D = build_graph(t);
    CurveSystem cs = glue_and_extract(D);
    if (cs.e.empty()) throw InputError("tuple " + t.str() + ": start vertices do not index the curves");
    std::vector<Word> out;
    for (auto& c : cs.e) out.push_back(curve_to_word(D, c));
    return out;
}

int compute_s_bar(int a, int n, int r) {
    if (a < 0 || n < 1) throw InputError("need a >= 0, n >= 1");
    if (std::gcd(2 * a + 1, 2 * r) != 1) throw InputError("need gcd(2a+1, 2r) = 1");
    DunwoodyDiagram D = build_graph(make_dunwoody(a, 0, 1, n, r, 0));
    Curve e1 = trace(D.graph, D.slot(false, 0, a));
    // one lap: from the first vertical arc up to the next one
    int sbar = 0;
    for (std::size_t k = 0; k < e1.size(); ++k) {
        const DArcRef& q = D.rec[e1[k]];
        if (k > 0 && q.type == DArc::C) break;
        if (q.type == DArc::AU || q.type == DArc::AL) sbar += q.forward ? -1 : 1;
    }
    return sbar;
}

}  // namespace pd
