#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "platdiag/dunwoody.hpp"
#include "platdiag/homology.hpp"
#include "platdiag/io.hpp"
#include "platdiag/takahashi.hpp"
#include "platdiag/word.hpp"

namespace pd::cli {

using nlohmann::json;

unsigned scan_jobs() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* e = std::getenv("PLATDIAG_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return hw;
}

namespace {

struct Opts {
    std::string format = "text";
    // dunwoody
    std::string tuple, tuple_pos, scan;
    bool arcs = false, all = false;
    long long a = 0, n = 1, r = 0;
    // takahashi
    std::string pq, rs;
    long long tn = 0;
    // moves
    std::string word, move, psl_file;
    int genus = -1, strands = -1;
    // export
    std::string out_file, as = "dot";
};

bool json_out(const Opts& o) { return o.format == "json"; }

std::vector<std::int64_t> parse_list(const std::string& s, std::size_t want, const char* what) {
    std::vector<std::int64_t> v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto c = s.find(',', pos);
        std::string item = s.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError(std::string("bad ") + what + " entry '" + item + "'");
        }
        if (c == std::string::npos) break;
        pos = c + 1;
    }
    if (v.size() != want) throw InputError(std::string(what) + " needs " + std::to_string(want) + " integers");
    return v;
}

DunwoodyTuple get_tuple(const Opts& o) {
    const std::string& t = o.tuple.empty() ? o.tuple_pos : o.tuple;
    if (t.empty()) throw InputError("missing --tuple a,b,c,n,r,s");
    return parse_dunwoody(t);
}

TakahashiParams get_tak(const Opts& o) {
    if (o.pq.empty() || o.rs.empty()) throw InputError("need --n N --pq P/Q --rs R/S");
    auto [p, q] = parse_ratio(o.pq);
    auto [r, s] = parse_ratio(o.rs);
    return make_takahashi(o.tn, p, q, r, s);
}

bool has_tak(const Opts& o) { return !o.pq.empty() || !o.rs.empty(); }

template <class Arcs>
std::string join_arcs(const Arcs& v) {
    std::string s;
    for (auto& a : v) s += (s.empty() ? "" : " ") + to_string(a);
    return s;
}

void dunwoody_words(const Opts& o, std::ostream& out) {
    DunwoodyTuple t = get_tuple(o);
    std::vector<Word> ws = psl_set(t);  // throws when inadmissible
    DunwoodyDiagram D = build_graph(t);
    CurveSystem cs = glue_and_extract(D);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (json_out(o)) {
            json j = {{"tuple", t.str()}, {"curve", i + 1}, {"word", to_string(ws[i])}, {"record", to_json(ws[i])}};
            if (o.arcs) j["arcs"] = join_arcs(curve_arcs(D, cs.e[i]));
            out << j.dump() << '\n';
        } else if (o.arcs) {
            out << join_arcs(curve_arcs(D, cs.e[i])) << '\n';
        } else {
            out << to_string(ws[i]) << '\n';
        }
    }
}

struct ScanRow {
    DunwoodyTuple t;
    AdmissibilityReport rep;
    std::string h1;
};

ScanRow scan_one(const DunwoodyTuple& t) {
    ScanRow row{t, is_admissible(t), ""};
    if (row.rep.admissible) row.h1 = to_string(h1_from_words(psl_set(t), t.n));
    return row;
}

void dunwoody_admissible(const Opts& o, std::ostream& out) {
    std::vector<DunwoodyTuple> todo;
    if (!o.scan.empty()) {
        auto m = parse_list(o.scan, 4, "scan");
        if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[3] < 1) throw InputError("scan bounds must be >= 0 (nMax >= 1)");
        if (m[0] > 50 || m[1] > 100 || m[2] > 100 || m[3] > 50) throw InputError("scan bounds too large");
        for (int a = 0; a <= m[0]; ++a)
            for (int b = 0; b <= m[1]; ++b)
                for (int c = 0; c <= m[2]; ++c) {
                    if (a + b + c == 0) continue;
                    for (int n = 1; n <= m[3]; ++n)
                        for (int r = 0; r < 2 * a + b + c; ++r)
                            for (int s = 0; s < n; ++s) todo.push_back(make_dunwoody(a, b, c, n, r, s));
                }
    } else {
        todo.push_back(get_tuple(o));
    }
    const bool single = o.scan.empty();
    const unsigned jobs = scan_jobs();
    const std::size_t block = 1024;
    std::vector<ScanRow> rows;
    for (std::size_t base = 0; base < todo.size(); base += block) {
        const std::size_t len = std::min(block, todo.size() - base);
        rows.assign(len, ScanRow{});
        std::atomic<std::size_t> next{0};
        std::exception_ptr fail;
        std::mutex fail_mu;
        auto work = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < len;) {
                try {
                    rows[k] = scan_one(todo[base + k]);
                } catch (...) {
                    std::lock_guard lk(fail_mu);
                    if (!fail) fail = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < std::min<std::size_t>(jobs, len); ++w) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        if (fail) std::rethrow_exception(fail);
        // ordered sink
        for (auto& row : rows) {
            if (!row.rep.admissible && !o.all && !single) continue;
            if (json_out(o)) {
                json j = {{"tuple", row.t.str()}, {"admissible", row.rep.admissible}, {"m", row.rep.m},
                          {"z2_rank", row.rep.rank}, {"components", row.rep.components}};
                if (row.rep.admissible) j["h1"] = row.h1;
                out << j.dump() << '\n';
            } else {
                out << row.t.str() << (row.rep.admissible ? " admissible" : " not-admissible") << " m=" << row.rep.m
                    << " rank=" << row.rep.rank;
                if (row.rep.admissible) out << " H1=" << row.h1;
                out << '\n';
            }
        }
        out.flush();
    }
}

void dunwoody_sbar(const Opts& o, std::ostream& out) {
    int v = compute_s_bar(static_cast<int>(o.a), static_cast<int>(o.n), static_cast<int>(o.r));
    if (json_out(o)) out << json{{"a", o.a}, {"n", o.n}, {"r", o.r}, {"sbar", v}}.dump() << '\n';
    else out << v << '\n';
}

void takahashi_words(const Opts& o, std::ostream& out) {
    TakahashiParams t = get_tak(o);
    TakahashiDiagram D = build_diagram(t);
    TakahashiCurves cs = tak_extract(D);
    std::vector<Word> ws = tak_psl_set(t);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (json_out(o)) {
            json j = {{"params", t.str()}, {"case", case_name(t.tag())}, {"curve", i + 1},
                      {"word", to_string(ws[i])}, {"record", to_json(ws[i])}};
            if (o.arcs) j["arcs"] = join_arcs(tak_curve_arcs(D, cs.e[i]));
            out << j.dump() << '\n';
        } else if (o.arcs) {
            out << join_arcs(tak_curve_arcs(D, cs.e[i])) << '\n';
        } else {
            out << to_string(ws[i]) << '\n';
        }
    }
}

void homology(const Opts& o, std::ostream& out) {
    if (has_tak(o)) {
        TakahashiParams t = get_tak(o);
        HomologyResult d = h1_from_words(tak_psl_set(t), 2 * t.n);
        HomologyResult s = takahashi_surgery_h1(t);
        bool agree = d == s;
        if (json_out(o)) {
            out << json{{"params", t.str()}, {"h1", to_json(d)}, {"surgery_h1", to_json(s)}, {"agree", agree}}.dump()
                << '\n';
        } else {
            out << "H1 = " << to_string(d) << '\n'
                << "surgery H1 = " << to_string(s) << '\n'
                << "cross-check: " << (agree ? "agree" : "DISAGREE") << '\n';
        }
        if (!agree) throw InternalError("diagram and surgery homology disagree for " + t.str());
        return;
    }
    DunwoodyTuple t = get_tuple(o);
    HomologyResult h = h1_from_words(psl_set(t), t.n);
    if (json_out(o)) out << json{{"tuple", t.str()}, {"h1", to_json(h)}}.dump() << '\n';
    else out << "H1 = " << to_string(h) << '\n';
}

// Smallest context holding every index in the given texts.
Context infer_context(const std::vector<std::string>& texts, int genus, int strands) {
    int g = 0, smax = 0;
    for (auto& s : texts) {
        Word w = parse_word(s, {1'000'000'000, 500'000'000});
        for (auto& l : w.letters()) {
            if (l.kind == Gen::Sigma) smax = std::max(smax, l.index);
            else g = std::max(g, l.index);
        }
    }
    Context c{genus >= 0 ? genus : g, strands >= 0 ? strands : std::max(1, (smax + 2) / 2)};
    return c;
}

void moves_apply(const Opts& o, std::ostream& out) {
    std::vector<std::string> texts{o.word};
    std::vector<std::string> psl_texts;
    if (!o.psl_file.empty()) {
        std::ifstream f(o.psl_file);
        if (!f) throw InputError("cannot read psl file '" + o.psl_file + "'");
        for (std::string line; std::getline(f, line);) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            psl_texts.push_back(line);
        }
    }
    texts.insert(texts.end(), psl_texts.begin(), psl_texts.end());
    Context c = infer_context(texts, o.genus, o.strands);
    MoveSpec m = parse_move(o.move);
    if ((m.move == Move::M4 || m.move == Move::M5 || m.move == Move::PslStar) && o.genus < 0)
        c.g = std::max(c.g, m.param);
    Word w = parse_word(o.word, c);
    std::vector<Word> psl;
    for (auto& s : psl_texts) psl.push_back(parse_word(s, c));
    Word res = apply_move(w, m, psl_texts.empty() ? nullptr : &psl);
    if (json_out(o))
        out << json{{"move", to_string(m)}, {"input", to_string(w)}, {"word", to_string(res)}, {"record", to_json(res)}}.dump()
            << '\n';
    else
        out << to_string(res) << '\n';
}

void diagram_export(const Opts& o, std::ostream& out) {
    std::string text;
    if (o.as != "dot" && o.as != "json") throw InputError("--as must be dot or json");
    if (has_tak(o)) {
        TakahashiDiagram D = build_diagram(get_tak(o));
        text = o.as == "dot" ? to_dot(D) : to_json(D).dump() + "\n";
    } else {
        DunwoodyDiagram D = build_graph(get_tuple(o));
        text = o.as == "dot" ? to_dot(D) : to_json(D).dump() + "\n";
    }
    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_file);
        if (!f) throw InputError("cannot write '" + o.out_file + "'");
        f << text;
        out << "wrote " << o.out_file << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"Open Heegaard diagrams, plat-slide words and homology for Dunwoody and Takahashi manifolds",
                 "platdiag"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text or json (one record per line)")
        ->check(CLI::IsMember({"text", "json"}));
    std::function<void()> action;

    auto tuple_opts = [&](CLI::App* s) {
        s->add_option("--tuple", o.tuple, "a,b,c,n,r,s");
        s->add_option("TUPLE", o.tuple_pos, "a,b,c,n,r,s (same as --tuple)");
    };
    auto tak_opts = [&](CLI::App* s, bool required) {
        auto* nn = s->add_option("--n", o.tn, "period n");
        auto* a = s->add_option("--pq", o.pq, "surgery ratio P/Q");
        auto* b = s->add_option("--rs", o.rs, "surgery ratio R/S");
        if (required) nn->required(), a->required(), b->required();
    };

    auto* dun = app.add_subcommand("dunwoody", "Dunwoody manifolds M(a,b,c,n,r,s)")->require_subcommand(1);
    auto* dw = dun->add_subcommand("words", "print the psl words e_1..e_n");
    tuple_opts(dw);
    dw->add_flag("--arcs", o.arcs, "print elementary arc sequences instead");
    dw->callback([&] { action = [&] { dunwoody_words(o, out); }; });
    auto* da = dun->add_subcommand("admissible", "admissibility of one tuple or a scan");
    tuple_opts(da);
    da->add_option("--scan", o.scan, "aMax,bMax,cMax,nMax");
    da->add_flag("--all", o.all, "also list non-admissible tuples");
    da->callback([&] { action = [&] { dunwoody_admissible(o, out); }; });
    auto* ds = dun->add_subcommand("sbar", "s-bar of the Minkus family");
    ds->add_option("--a", o.a)->required();
    ds->add_option("--n", o.n)->required();
    ds->add_option("--r", o.r)->required();
    ds->callback([&] { action = [&] { dunwoody_sbar(o, out); }; });

    auto* tak = app.add_subcommand("takahashi", "periodic Takahashi manifolds T_n(p/q, r/s)")->require_subcommand(1);
    auto* tw = tak->add_subcommand("words", "print the psl words e_1..e_2n");
    tak_opts(tw, true);
    tw->add_flag("--arcs", o.arcs, "print elementary arc sequences instead");
    tw->callback([&] { action = [&] { takahashi_words(o, out); }; });

    auto* hom = app.add_subcommand("homology", "first homology from the diagram");
    tuple_opts(hom);
    tak_opts(hom, false);
    hom->callback([&] { action = [&] { homology(o, out); }; });

    auto* mv = app.add_subcommand("moves", "Markov and plat-slide moves")->require_subcommand(1);
    auto* ma = mv->add_subcommand("apply", "apply one move to a word");
    ma->add_option("--word", o.word, "word, e.g. \"a1 b2^-1 s1\" (1 = empty)")->required();
    ma->add_option("--move", o.move, "M1..M6, PslStar, Psl with :left/:right, :<index>, :inv")->required();
    ma->add_option("--psl-file", o.psl_file, "file with one d_i word per line");
    ma->add_option("--genus", o.genus, "genus g (default: largest alpha/beta index)");
    ma->add_option("--strands", o.strands, "half strand count n (default: from sigma indices)");
    ma->callback([&] { action = [&] { moves_apply(o, out); }; });

    auto* dg = app.add_subcommand("diagram", "diagram output")->require_subcommand(1);
    auto* de = dg->add_subcommand("export", "write the open Heegaard diagram (Graphviz or JSON)");
    tuple_opts(de);
    tak_opts(de, false);
    de->add_option("--out", o.out_file, "output file (default stdout)");
    de->add_option("--as", o.as, "dot or json");
    de->callback([&] { action = [&] { diagram_export(o, out); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        if (action) action();
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace pd::cli
