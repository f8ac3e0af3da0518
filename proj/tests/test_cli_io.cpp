#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "platdiag/io.hpp"

using namespace pd;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("text and JSON round trips of random words") {
    pdt::Rng rng(51);
    int fails = 0;
    for (int k = 0; k < 10000; ++k) {
        Context c{1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 4)};
        Word w = pdt::random_word(rng, c, 25);
        if (parse_word(to_string(w), c) != w) ++fails;
        if (word_from_json(json::parse(to_json(w).dump())) != w) ++fails;
    }
    CHECK(fails == 0);
}

TEST_CASE("bad JSON word records") {
    CHECK_THROWS_AS(word_from_json(json{{"g", 2}}), InputError);
    CHECK_THROWS_AS(word_from_json(json::parse(R"({"g":2,"n":1,"letters":[{"kind":"q","index":1,"exponent":1}]})")),
                    InputError);
    CHECK_THROWS_AS(word_from_json(json::parse(R"({"g":2,"n":1,"letters":[{"kind":"s","index":3,"exponent":1}]})")),
                    InputError);
}

TEST_CASE("homology records") {
    HomologyResult h;
    h.torsion = {2, 22};
    json j = to_json(h);
    CHECK(j["free_rank"] == 0);
    CHECK(j["torsion"] == json::array({"2", "22"}));
    CHECK(j["text"] == "Z/2 + Z/22");
}

TEST_CASE("dunwoody words, text and JSON agree") {
    Run t = run({"dunwoody", "words", "1,1,1,3,2,1"});
    REQUIRE(t.code == 0);
    auto L = lines(t.out);
    REQUIRE(L.size() == 3);
    CHECK(L[0] == "b1 b2 a3^-1 b3 a1 b3^-1 a3 a1^-1");
    Run j = run({"--format", "json", "dunwoody", "words", "--tuple", "1,1,1,3,2,1"});
    REQUIRE(j.code == 0);
    auto J = lines(j.out);
    REQUIRE(J.size() == 3);
    for (int i = 0; i < 3; ++i) {
        json rec = json::parse(J[i]);
        CHECK(rec["word"] == L[i]);
        CHECK(to_string(word_from_json(rec["record"])) == L[i]);
    }
    CHECK(lines(run({"dunwoody", "words", "1,1,1,3,2,1", "--arcs"}).out).size() == 3);
}

TEST_CASE("takahashi words and homology") {
    Run t = run({"takahashi", "words", "--n", "2", "--pq", "1/2", "--rs", "2/3"});
    REQUIRE(t.code == 0);
    CHECK(lines(t.out).size() == 4);
    Run a = run({"takahashi", "words", "--n", "2", "--pq", "1/2", "--rs", "2/3", "--arcs"});
    CHECK(lines(a.out)[0] == "->B1 <-F2 ->X3 <-F2 ->AL4");
    Run h = run({"homology", "--n", "2", "--pq", "1/2", "--rs", "2/3"});
    CHECK(h.code == 0);
    CHECK(h.out == "H1 = Z/2 + Z/22\nsurgery H1 = Z/2 + Z/22\ncross-check: agree\n");
    Run hj = run({"--format", "json", "homology", "--n", "2", "--pq", "1/2", "--rs", "2/3"});
    CHECK(json::parse(hj.out)["agree"] == true);
    CHECK(run({"homology", "1,1,1,3,2,1"}).out == "H1 = Z^3\n");
}

TEST_CASE("s bar and admissibility scan") {
    CHECK(run({"dunwoody", "sbar", "--a", "2", "--n", "4", "--r", "1"}).out == "0\n");
    CHECK(run({"dunwoody", "sbar", "--a", "1", "--n", "5", "--r", "1"}).out == "-2\n");
    Run one = run({"dunwoody", "admissible", "--tuple", "1,1,1,3,2,1"});
    CHECK(one.out == "1,1,1,3,2,1 admissible m=3 rank=3 H1=Z^3\n");
    Run s1 = run({"dunwoody", "admissible", "--scan", "1,1,1,3"});
    REQUIRE(s1.code == 0);
    // the scan output does not depend on the worker count
    setenv("PLATDIAG_JOBS", "1", 1);
    Run s2 = run({"dunwoody", "admissible", "--scan", "1,1,1,3"});
    unsetenv("PLATDIAG_JOBS");
    CHECK(s1.out == s2.out);
    for (auto& l : lines(s1.out)) CHECK(l.find(" admissible ") != std::string::npos);
    Run all = run({"--format", "json", "dunwoody", "admissible", "--scan", "1,1,1,2", "--all"});
    for (auto& l : lines(all.out)) CHECK(json::parse(l).contains("admissible"));
}

TEST_CASE("moves apply") {
    CHECK(run({"moves", "apply", "--word", "1", "--move", "M1:right"}).out == "s1\n");
    CHECK(run({"moves", "apply", "--word", "a1 s1", "--move", "M4:left:2"}).out == "a2 s1^-1 a2 s1^-1 a1 s1\n");
    CHECK(run({"moves", "apply", "--word", "s1", "--move", "M6:1"}).out == "s1 s2\n");
    std::string path = "cli_io_psl.txt";
    {
        std::ofstream f(path);
        f << "# d_1\nb1 a2^-1\n";
    }
    CHECK(run({"moves", "apply", "--word", "s1", "--move", "Psl:1", "--psl-file", path}).out == "b1 a2^-1 s1\n");
    std::remove(path.c_str());
    Run j = run({"--format", "json", "moves", "apply", "--word", "a1", "--move", "PslStar:1"});
    CHECK(json::parse(j.out)["word"] == "a1 b1");
}

TEST_CASE("diagram export") {
    Run d = run({"diagram", "export", "1,1,1,3,2,1"});
    REQUIRE(d.code == 0);
    CHECK(d.out.rfind("graph", 0) == 0);
    CHECK(d.out.find("style=dashed") != std::string::npos);
    Run j = run({"diagram", "export", "1,1,1,3,2,1", "--as", "json"});
    json rec = json::parse(j.out);
    CHECK(rec["arcs"].size() == 12);
    CHECK(rec["disk_count"] == 6);
    Run t = run({"diagram", "export", "--n", "2", "--pq", "1/2", "--rs", "2/3", "--as", "json"});
    CHECK(json::parse(t.out)["params"]["family"] == "takahashi");
}

TEST_CASE("exit codes") {
    CHECK(run({"dunwoody", "words", "0,0,2,1,0,0"}).code == 1);
    CHECK(run({"dunwoody", "words", "1,1,1"}).code == 1);
    CHECK(run({"takahashi", "words", "--n", "2", "--pq", "2/4", "--rs", "2/3"}).code == 1);
    CHECK(run({"takahashi", "words", "--n", "2", "--pq", "1/1", "--rs", "2/3"}).code == 1);
    CHECK(run({"moves", "apply", "--word", "a1 x", "--move", "M1"}).code == 1);
    CHECK(run({"moves", "apply", "--word", "a1", "--move", "M9"}).code == 1);
    CHECK(run({"dunwoody", "sbar", "--a", "1", "--n", "3", "--r", "3"}).code == 1);
    CHECK(run({"diagram", "export", "1,1,1,3,2,1", "--as", "svg"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"--format", "xml", "homology", "1,1,1,3,2,1"}).code == 1);
    Run e = run({"moves", "apply", "--word", "a1  a2", "--move", "M1"});
    CHECK(e.err.find("offset 3") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}
