// Prints one [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "platdiag/dunwoody.hpp"
#include "platdiag/homology.hpp"
#include "platdiag/io.hpp"
#include "platdiag/takahashi.hpp"

using namespace pd;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

std::vector<std::string> cli_lines(std::vector<std::string> args) {
    std::ostringstream o, e;
    if (cli::run(args, o, e) != 0) throw std::runtime_error("cli failed: " + e.str());
    std::vector<std::string> v;
    std::istringstream in(o.str());
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::string reduced(const char* s, int g) { return to_string(free_reduce(parse_word(s, {g, 1}))); }

Outcome golden_dunwoody() {
    Outcome r;
    const char* want[] = {"b1 b2 a3^-1 b3 a1 b3^-1 a3 a1^-1", "b2 b3 a1^-1 b1 a2 b1^-1 a1 a2^-1",
                          "b3 b1 a2^-1 b2 a3 b2^-1 a2 a3^-1"};
    auto got = cli_lines({"dunwoody", "words", "1,1,1,3,2,1"});
    if (got.size() != 3) r.fail("expected 3 words, got " + std::to_string(got.size()));
    for (std::size_t i = 0; i < got.size() && i < 3; ++i)
        if (got[i] != reduced(want[i], 3)) r.fail("e_" + std::to_string(i + 1) + " = " + got[i]);
    return r;
}

Outcome closed_forms() {
    Outcome r;
    for (int n = 3; n <= 8; ++n) {
        auto f = psl_set(make_dunwoody(2, 0, 1, n, 1, 0));
        auto s = psl_set(make_dunwoody(1, 0, 1, n, 1, -2));
        for (int i = 1; i <= n; ++i) {
            Word fw({n, 1}, {alp(i, -1), bet(i - 1, -1), alp(i - 1), alp(i, -1), bet(i), alp(i + 1), alp(i, -1)});
            Word sw({n, 1}, {bet(i), bet(i + 1), alp(i + 2, -1), bet(i + 1, -1), alp(i + 1), alp(i, -1)});
            if (f[i - 1] != free_reduce(fw)) r.fail("Fibonacci n=" + std::to_string(n) + " i=" + std::to_string(i));
            if (s[i - 1] != free_reduce(sw)) r.fail("Sieradski n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return r;
}

Outcome s_bar() {
    Outcome r;
    for (int n = 2; n <= 8; ++n)
        if (int v = compute_s_bar(2, n, 1); v != 0) r.fail("a=2 n=" + std::to_string(n) + " gave " + std::to_string(v));
    for (int n = 3; n <= 8; ++n)
        if (int v = compute_s_bar(1, n, 1); v != -2) r.fail("a=1 n=" + std::to_string(n) + " gave " + std::to_string(v));
    return r;
}

Outcome golden_takahashi() {
    Outcome r;
    const char* words[] = {"a2^-1 b2 b1^-1 a1^-1 b1 a1 a4 b1^-1 a2^-1 b2 b1^-1 a1^-1 b1 a1 a4 a1^-1",
                           "a4^-1 b4 b3^-1 a3^-1 b3 a3 a2 b3^-1 a4^-1 b4 b3^-1 a3^-1 b3 a3 a2 a3^-1",
                           "b3^-1 a3 a1^-1 b2^-1 b3^-1 a3 a1^-1 a2^-1 b3^-1 a3 a1^-1 a2^-1",
                           "b1^-1 a1 a3^-1 b4^-1 b1^-1 a1 a3^-1 a4^-1 b1^-1 a1 a3^-1 a4^-1"};
    const char* arcs[] = {"->B1 <-F2 ->X3 <-F2 ->AL4", "->B3 <-F4 ->X1 <-F4 ->AL2",
                          "->AU2 <-Y3 ->G1 <-Y3 ->B1 ->AU2 <-Y3 ->B1", "->AU4 <-Y1 ->G3 <-Y1 ->B3 ->AU4 <-Y1 ->B3"};
    std::vector<std::string> base{"takahashi", "words", "--n", "2", "--pq", "1/2", "--rs", "2/3"};
    auto w = cli_lines(base);
    base.push_back("--arcs");
    auto a = cli_lines(base);
    if (w.size() != 4 || a.size() != 4) {
        r.fail("expected 4 curves");
        return r;
    }
    for (int i = 0; i < 4; ++i) {
        if (w[i] != reduced(words[i], 4)) r.fail("word e_" + std::to_string(i + 1) + " = " + w[i]);
        if (a[i] != arcs[i]) r.fail("arcs e_" + std::to_string(i + 1) + " = " + a[i]);
        Word sub({4, 1});
        std::istringstream in(a[i]);
        for (std::string tok; in >> tok;) sub = concat(sub, tak_dict_word(parse_tarc(tok), 2));
        if (!pdt::freely_equal(sub, parse_word(words[i], {4, 1}))) r.fail("substitution e_" + std::to_string(i + 1));
    }
    return r;
}

Outcome homology_sanity() {
    Outcome r;
    HomologyResult h = h1_from_words(psl_set(make_dunwoody(1, 1, 1, 3, 2, 1)), 3);
    if (to_string(h) != "Z^3") r.fail("M(1,1,1,3,2,1) gave " + to_string(h));
    for (int a = 1; a <= 5; ++a) {
        HomologyResult m = h1_from_words(psl_set(make_dunwoody(a, 0, 1, 2, 1, compute_s_bar(a, 2, 1))), 2);
        if (m.free_rank != 0 || m.torsion_order() != 2 * a + 1)
            r.fail("a=" + std::to_string(a) + " gave " + to_string(m));
    }
    return r;
}

Outcome cross_oracle() {
    Outcome r;
    auto t0 = std::chrono::steady_clock::now();
    int count = 0;
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q)
                for (int a = 0; a <= 4; ++a)
                    for (int b = 0; b <= 4; ++b) {
                        if (std::gcd(p, q) != 1 || std::gcd(a, b) != 1 || p == q || a == b) continue;
                        TakahashiParams t = make_takahashi(n, p, q, a, b);
                        ++count;
                        HomologyResult d = h1_from_words(tak_psl_set(t), 2 * n), s = takahashi_surgery_h1(t);
                        if (d != s) r.fail(t.str() + ": " + to_string(d) + " vs " + to_string(s));
                    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 60) r.fail("grid took " + std::to_string(secs) + " s");
    if (r.ok) r.note = std::to_string(count) + " parameter sets in " + std::to_string(secs) + " s";
    return r;
}

Outcome move_engine() {
    Outcome r;
    pdt::Rng rng(71);
    const Context c{3, 3};
    std::vector<Word> d;
    for (int i = 0; i < 3; ++i) d.push_back(free_reduce(pdt::random_word(rng, {3, 1}, 8, false)));
    const Move kinds[] = {Move::M1, Move::M2, Move::M3, Move::M4, Move::M5, Move::M6, Move::PslStar, Move::Psl};
    for (Move mv : kinds)
        for (int k = 0; k < 1000; ++k) {
            Word w = pdt::random_word(rng, c, 20);
            MoveSpec m{mv, k % 2 ? Side::Left : Side::Right, 1 + static_cast<int>(rng() % 2), false};
            if (mv == Move::PslStar) m.side = Side::Right;
            if (mv == Move::Psl) m.side = Side::Left;
            Word u = apply_move(w, m, &d);
            if (mv == Move::M6) {
                if (u.context() != Context{c.g, c.n + 1}) r.fail("M6 context");
                for (auto& l : u.letters())
                    if (l.kind == Gen::Sigma && (l.index < 1 || l.index > 2 * c.n + 1)) r.fail("M6 index range");
            }
            m.invert = true;
            if (!pdt::freely_equal(apply_move(u, m, &d), w)) r.fail(std::string(move_name(mv)) + " not undone");
        }
    for (int k = 0; k < 100; ++k) {
        int K = 1 + static_cast<int>(rng() % c.n);
        Word u = pdt::random_word(rng, c, 12), v = pdt::random_word(rng, c, 12);
        if (!pdt::freely_equal(stabilize_Tk(concat(u, v), K), concat(stabilize_Tk(u, K), stabilize_Tk(v, K))))
            r.fail("T_k is not multiplicative");
    }
    return r;
}

Outcome structure() {
    Outcome r;
    pdt::Rng rng(81);
    int dun = 0;
    while (dun < 20) {
        int a = rng() % 4, b = rng() % 3, c = rng() % 3, n = 2 + rng() % 5;
        if (a + b + c == 0) continue;
        DunwoodyTuple t = make_dunwoody(a, b, c, n, rng() % 16, rng() % 16);
        if (!is_admissible(t).admissible || glue_and_extract(build_graph(t)).e.empty()) continue;
        auto ws = psl_set(t);
        for (int i = 0; i < n; ++i)
            if (shift_indices(ws[i], 1) != ws[(i + 1) % n]) r.fail("Dunwoody shift " + t.str());
        ++dun;
    }
    for (int k = 0; k < 20; ++k) {
        int n = 2 + rng() % 3, p, q, a, b;
        do {
            p = rng() % 5, q = rng() % 5, a = rng() % 5, b = rng() % 5;
        } while (std::gcd(p, q) != 1 || std::gcd(a, b) != 1 || p == q || a == b);
        TakahashiParams t = make_takahashi(n, p, q, a, b);
        auto ws = tak_psl_set(t);
        for (int i = 0; i < n; ++i)
            if (shift_indices(ws[i], 2) != ws[(i + 1) % n] || shift_indices(ws[n + i], 2) != ws[n + (i + 1) % n])
                r.fail("Takahashi shift " + t.str());
        TakahashiDiagram D = build_diagram(t);
        std::vector<int> used(D.graph.arc_count, 0);
        for (auto& c : tak_extract(D).curves)
            for (int x : c) ++used[D.graph.arc_of[x]];
        for (int u : used)
            if (u != 1) r.fail("arc reuse " + t.str());
    }
    int tuples = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                int d = 2 * a + b + c;
                if (d == 0 || d > 6) continue;
                for (int n = 1; n <= 4; ++n)
                    for (int x = 0; x < d; ++x)
                        for (int s = 0; s < n; ++s) {
                            DunwoodyTuple t = make_dunwoody(a, b, c, n, x, s);
                            DunwoodyDiagram D = build_graph(t);
                            std::vector<int> used(D.graph.arc_count, 0);
                            for (auto& cv : glue_and_extract(D).curves)
                                for (int y : cv) ++used[D.graph.arc_of[y]];
                            for (int u : used)
                                if (u != 1) r.fail("arc reuse " + t.str());
                            AdmissibilityReport rep = is_admissible(t);
                            pdt::DunOracle o = pdt::dunwoody_oracle(a, b, c, n, x, s);
                            if (rep.admissible != o.admissible || rep.m != o.m) r.fail("oracle disagrees on " + t.str());
                            ++tuples;
                        }
            }
    if (r.ok) r.note = std::to_string(tuples) + " tuples against the oracle";
    return r;
}

Outcome round_trip() {
    Outcome r;
    pdt::Rng rng(91);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
        Context c{1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 4)};
        Word w = pdt::random_word(rng, c, 25);
        if (parse_word(to_string(w), c) != w || word_from_json(nlohmann::json::parse(to_json(w).dump())) != w) ++bad;
    }
    if (bad) r.fail(std::to_string(bad) + " failures");
    return r;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"golden Dunwoody example", golden_dunwoody},
        {"Fibonacci and Sieradski closed forms", closed_forms},
        {"s-bar procedure", s_bar},
        {"golden Takahashi example", golden_takahashi},
        {"homology sanity", homology_sanity},
        {"Takahashi surgery cross-oracle", cross_oracle},
        {"move engine", move_engine},
        {"structural properties", structure},
        {"round-trip serialization", round_trip},
    };
    int failed = 0, k = 0;
    for (auto& [name, fn] : criteria) {
        ++k;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << name;
        if (!o.note.empty()) std::cout << " (" << o.note << ")";
        std::cout << '\n';
    }
    return failed ? 1 : 0;
}
