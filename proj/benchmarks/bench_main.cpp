#include <random>

#include <benchmark/benchmark.h>

#include "platdiag/dunwoody.hpp"
#include "platdiag/homology.hpp"
#include "platdiag/takahashi.hpp"
#include "platdiag/word.hpp"

using namespace pd;

namespace {

Word random_word(std::mt19937_64& rng, Context c, int len) {
    std::vector<Letter> v;
    for (int k = 0; k < len; ++k) {
        int e = rng() % 2 ? 1 : -1;
        switch (rng() % 3) {
            case 0: v.push_back(sig(1 + rng() % (2 * c.n - 1), e)); break;
            case 1: v.push_back(alp(1 + rng() % c.g, e)); break;
            default: v.push_back(bet(1 + rng() % c.g, e));
        }
    }
    return Word(c, std::move(v));
}

void BM_FreeReduce(benchmark::State& st) {
    std::mt19937_64 rng(1);
    Word w = random_word(rng, {2, 2}, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(free_reduce(w));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_FreeReduce)->Range(64, 1 << 16);

void BM_StabilizeTk(benchmark::State& st) {
    std::mt19937_64 rng(2);
    Word w = random_word(rng, {2, 4}, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(stabilize_Tk(w, 2));
}
BENCHMARK(BM_StabilizeTk)->Range(64, 1 << 14);

void BM_SmithNormalForm(benchmark::State& st) {
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(st.range(0));
    IntMatrix m(n, std::vector<BigInt>(n));
    for (auto& r : m)
        for (auto& x : r) x = static_cast<long long>(rng() % 41) - 20;
    for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 24, 4);

void BM_DunwoodyPsl(benchmark::State& st) {
    DunwoodyTuple t = make_dunwoody(2, 0, 1, st.range(0), 1, 0);
    for (auto _ : st) benchmark::DoNotOptimize(psl_set(t));
}
BENCHMARK(BM_DunwoodyPsl)->RangeMultiplier(2)->Range(4, 256);

void BM_Admissible(benchmark::State& st) {
    DunwoodyTuple t = make_dunwoody(3, 2, 2, st.range(0), 3, 1);
    for (auto _ : st) benchmark::DoNotOptimize(is_admissible(t));
}
BENCHMARK(BM_Admissible)->RangeMultiplier(2)->Range(4, 128);

void BM_AdmissibleScan(benchmark::State& st) {
    for (auto _ : st) {
        int yes = 0;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    if (a + b + c == 0) continue;
                    int d = 2 * a + b + c;
                    for (int n = 1; n <= 4; ++n)
                        for (int r = 0; r < d; ++r)
                            for (int s = 0; s < n; ++s) yes += is_admissible(make_dunwoody(a, b, c, n, r, s)).admissible;
                }
        benchmark::DoNotOptimize(yes);
    }
}
BENCHMARK(BM_AdmissibleScan)->Unit(benchmark::kMillisecond);

void BM_TakahashiHomology(benchmark::State& st) {
    TakahashiParams t = make_takahashi(st.range(0), 1, 2, 2, 3);
    for (auto _ : st) {
        benchmark::DoNotOptimize(h1_from_words(tak_psl_set(t), 2 * t.n));
        benchmark::DoNotOptimize(takahashi_surgery_h1(t));
    }
}
BENCHMARK(BM_TakahashiHomology)->RangeMultiplier(2)->Range(1, 32);

}  // namespace

BENCHMARK_MAIN();
