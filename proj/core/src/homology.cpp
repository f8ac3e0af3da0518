#include "platdiag/homology.hpp"

#include <algorithm>
#include <utility>

namespace pd {

std::string to_string(const Presentation& p) {
    std::string s = "<";
    for (int j = 1; j <= p.g; ++j) s += (j > 1 ? ", x" : "x") + std::to_string(j);
    s += " |";
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        s += k ? ", " : " ";
        const Word& r = p.relators[k];
        if (r.empty()) s += "1";
        for (std::size_t i = 0; i < r.letters().size(); ++i) {
            const Letter& l = r.letters()[i];
            s += (i ? " x" : "x") + std::to_string(l.index);
            if (l.exp != 1) s += "^" + std::to_string(l.exp);
        }
    }
    return s + " >";
}

Presentation presentation_from_psl(const std::vector<Word>& words, int g) {
    Presentation p;
    p.g = g;
    for (const Word& w : words) {
        if (w.context().g != g) throw InputError("presentation: genus mismatch");
        std::vector<Letter> keep;
        for (const Letter& l : w.letters()) {
            if (l.kind == Gen::Sigma) throw InputError("presentation: word contains sigma letters");
            if (l.kind == Gen::Alpha) keep.push_back(l);
        }
        p.relators.push_back(free_reduce(Word({g, 0}, std::move(keep))));
    }
    return p;
}

std::vector<BigInt> smith_normal_form(IntMatrix m) {
    const std::size_t R = m.size(), C = R ? m[0].size() : 0;
    const std::size_t K = std::min(R, C);
    for (std::size_t t = 0; t < K; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m[i][j] != 0 && (pi == R || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
            if (pi == R) {
                std::vector<BigInt> d;
                for (std::size_t k = 0; k < K; ++k) d.push_back(abs(m[k][k]));
                return d;
            }
            std::swap(m[t], m[pi]);
            for (auto& row : m) std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest, else fold an offending row in and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<BigInt> d;
    for (std::size_t k = 0; k < K; ++k) d.push_back(abs(m[k][k]));
    return d;
}

BigInt HomologyResult::torsion_order() const {
    BigInt o = 1;
    for (auto& t : torsion) o *= t;
    return o;
}

std::string to_string(const HomologyResult& h) {
    std::string s;
    if (h.free_rank == 1) s = "Z";
    else if (h.free_rank > 1) s = "Z^" + std::to_string(h.free_rank);
    for (auto& t : h.torsion) s += (s.empty() ? "Z/" : " + Z/") + t.str();
    return s.empty() ? "0" : s;
}

HomologyResult cokernel(const IntMatrix& rows, int g) {
    HomologyResult h;
    if (rows.empty()) {
        h.free_rank = g;
        return h;
    }
    std::vector<BigInt> d = smith_normal_form(rows);
    int nonzero = 0;
    for (auto& x : d) {
        if (x == 0) continue;
        ++nonzero;
        if (x > 1) h.torsion.push_back(x);
    }
    h.free_rank = g - nonzero;
    return h;
}

HomologyResult h1_from_presentation(const Presentation& p) {
    IntMatrix M;
    for (const Word& r : p.relators) {
        std::vector<BigInt> row(p.g, 0);
        for (const Letter& l : r.letters()) row[l.index - 1] += l.exp;
        M.push_back(std::move(row));
    }
    return cokernel(M, p.g);
}

HomologyResult h1_from_words(const std::vector<Word>& psl, int g) {
    return h1_from_presentation(presentation_from_psl(psl, g));
}

int z2_rank(std::vector<std::vector<std::int64_t>> rows) {
    if (rows.empty()) return 0;
    const std::size_t C = rows[0].size();
    for (auto& r : rows)
        for (auto& x : r) x = ((x % 2) + 2) % 2;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < C && rk < rows.size(); ++c) {
        std::size_t p = rk;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rk], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rk && rows[i][c])
                for (std::size_t j = 0; j < C; ++j) rows[i][j] ^= rows[rk][j];
        ++rk;
    }
    return static_cast<int>(rk);
}

}  // namespace pd
