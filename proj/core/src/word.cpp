#include "platdiag/word.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace pd {

int wrap_index(long long i, int g) {
    if (g <= 0) throw InputError("alpha/beta letter in a genus 0 context");
    long long r = (i - 1) % g;
    if (r < 0) r += g;
    return static_cast<int>(r) + 1;
}

namespace {

void check_context(Context c) {
    if (c.g < 0 || c.n < 0) throw InputError("negative genus or strand count");
}

Letter normalize(Letter l, Context c) {
    if (l.exp == 0) throw InputError("zero exponent in letter");
    if (l.kind == Gen::Sigma) {
        if (l.index < 1 || l.index > 2 * c.n - 1)
            throw InputError("sigma index " + std::to_string(l.index) + " outside [1," +
                             std::to_string(2 * c.n - 1) + "]");
    } else {
        l.index = wrap_index(l.index, c.g);
    }
    return l;
}

bool same_gen(const Letter& a, const Letter& b) { return a.kind == b.kind && a.index == b.index; }

// push with merging; assumes out is already reduced
void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && same_gen(out.back(), l)) {
        out.back().exp += l.exp;
        if (out.back().exp == 0) out.pop_back();
    } else {
        out.push_back(l);
    }
}

}  // namespace

Word::Word(Context ctx, std::vector<Letter> letters) : ctx_(ctx), letters_(std::move(letters)) {
    check_context(ctx_);
    for (auto& l : letters_) l = normalize(l, ctx_);
}

bool Word::sigma_free() const {
    for (auto& l : letters_)
        if (l.kind == Gen::Sigma) return false;
    return true;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto& l : w.letters()) push_reduced(out, l);
    return Word(w.context(), std::move(out));
}

bool is_reduced(const Word& w) {
    auto& L = w.letters();
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i].exp == 0) return false;
        if (i && same_gen(L[i - 1], L[i])) return false;
    }
    return true;
}

Word concat(const Word& u, const Word& v) {
    if (!(u.context() == v.context())) throw InputError("concat: context mismatch");
    std::vector<Letter> out;
    out.reserve(u.size() + v.size());
    for (auto& l : u.letters()) push_reduced(out, l);
    for (auto& l : v.letters()) push_reduced(out, l);
    return Word(u.context(), std::move(out));
}

Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& l : out) l.exp = -l.exp;
    return Word(w.context(), std::move(out));
}

Word with_context(const Word& w, Context ctx) {
    if (ctx.g != w.context().g) throw InputError("genus mismatch");
    if (!w.sigma_free()) throw InputError("word with sigma letters cannot change strand context");
    return Word(ctx, w.letters());
}

Word shift_indices(const Word& w, int k) {
    std::vector<Letter> out = w.letters();
    for (auto& l : out)
        if (l.kind != Gen::Sigma) l.index += k;
    return Word(w.context(), std::move(out));
}

ExponentVector exponent_vector(const Word& w) {
    int g = w.context().g;
    ExponentVector r;
    r.v.assign(2 * static_cast<std::size_t>(g), 0);
    for (auto& l : w.letters()) {
        switch (l.kind) {
            case Gen::Sigma: r.had_sigma = true; break;
            case Gen::Alpha: r.v[l.index - 1] += l.exp; break;
            case Gen::Beta: r.v[g + l.index - 1] += l.exp; break;
        }
    }
    return r;
}

Word stabilize_Tk(const Word& w, int k) {
    Context c = w.context();
    if (k < 1 || 2 * k > 2 * c.n)
        throw InputError("T_k: k=" + std::to_string(k) + " out of range for n=" + std::to_string(c.n));
    Context up{c.g, c.n + 1};
    std::vector<Letter> out;
    out.reserve(w.size() + 4);
    for (auto l : w.letters()) {
        if (l.kind != Gen::Sigma || l.index < 2 * k) {
            push_reduced(out, l);
        } else if (l.index == 2 * k) {
            // sigma_2k^e -> sigma_2k sigma_2k+1 sigma_2k+2^e sigma_2k+1^-1 sigma_2k^-1
            push_reduced(out, sig(2 * k));
            push_reduced(out, sig(2 * k + 1));
            push_reduced(out, sig(2 * k + 2, l.exp));
            push_reduced(out, sig(2 * k + 1, -1));
            push_reduced(out, sig(2 * k, -1));
        } else {
            push_reduced(out, sig(l.index + 2, l.exp));
        }
    }
    return Word(up, std::move(out));
}

Word destabilize_Tk(const Word& w, int k) {
    Context c = w.context();
    if (k < 1 || c.n < 2 || 2 * k > 2 * (c.n - 1))
        throw InputError("T_k inverse: k=" + std::to_string(k) + " out of range for n=" + std::to_string(c.n));
    Word v = free_reduce(w);
    const auto& L = v.letters();
    std::vector<Letter> out;
    auto not_image = [] { return InputError("word is not in the image of T_k"); };
    for (std::size_t i = 0; i < L.size(); ++i) {
        const Letter& l = L[i];
        if (l.kind != Gen::Sigma || l.index < 2 * k) {
            push_reduced(out, l);
        } else if (l.index == 2 * k) {
            if (i + 4 >= L.size()) throw not_image();
            const Letter* b = &L[i];
            if (!(b[0].exp == 1 && b[1] == sig(2 * k + 1) && b[2].kind == Gen::Sigma &&
                  b[2].index == 2 * k + 2 && b[3] == sig(2 * k + 1, -1) && b[4] == sig(2 * k, -1)))
                throw not_image();
            push_reduced(out, sig(2 * k, b[2].exp));
            i += 4;
        } else if (l.index >= 2 * k + 3) {
            push_reduced(out, sig(l.index - 2, l.exp));
        } else {
            throw not_image();
        }
    }
    return Word({c.g, c.n - 1}, std::move(out));
}

namespace {

Word mult(const Word& w, const Word& x, Side side, bool inv) {
    Word y = inv ? invert(x) : x;
    return side == Side::Left ? concat(y, w) : concat(w, y);
}

void need(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

Word apply_move(const Word& w, const MoveSpec& m, const std::vector<Word>* psl_words) {
    Context c = w.context();
    const int i = m.param;
    switch (m.move) {
        case Move::M1:
            need(c.n >= 1, "M1 needs at least 2 strands");
            return mult(w, Word(c, {sig(1)}), m.side, m.invert);
        case Move::M2:
            need(i >= 1 && 2 * i + 1 <= 2 * c.n - 1, "M2: i out of range");
            return mult(w, Word(c, {sig(2 * i), sig(2 * i + 1), sig(2 * i - 1), sig(2 * i)}), m.side, m.invert);
        case Move::M3:
            need(c.n >= 2, "M3 needs at least 4 strands");
            return mult(w, Word(c, {sig(2), sig(1, 2), sig(2)}), m.side, m.invert);
        case Move::M4:
            need(i >= 1 && i <= c.g && c.n >= 1, "M4: j out of range");
            return mult(w, Word(c, {alp(i), sig(1, -1), alp(i), sig(1, -1)}), m.side, m.invert);
        case Move::M5:
            need(i >= 1 && i <= c.g && c.n >= 1, "M5: j out of range");
            return mult(w, Word(c, {bet(i), sig(1, -1), bet(i), sig(1, -1)}), m.side, m.invert);
        case Move::M6:
            if (!m.invert) {
                Word t = stabilize_Tk(w, i);
                return concat(t, Word(t.context(), {sig(2 * i)}));
            } else {
                need(i >= 1 && c.n >= 2 && 2 * i <= 2 * (c.n - 1), "M6: k out of range");
                return destabilize_Tk(concat(w, Word(c, {sig(2 * i, -1)})), i);
            }
        case Move::PslStar:
            need(i >= 1 && i <= c.g, "psl*: i out of range");
            return mult(w, Word(c, {bet(i)}), Side::Right, m.invert);
        case Move::Psl: {
            need(psl_words != nullptr, "psl: no d_i words supplied");
            need(i >= 1 && i <= static_cast<int>(psl_words->size()), "psl: i out of range");
            const Word& d = (*psl_words)[i - 1];
            need(d.sigma_free(), "psl: d_i word contains sigma letters");
            return mult(w, with_context(d, c), Side::Left, m.invert);
        }
    }
    throw InternalError("unknown move");
}

std::string to_string(const Letter& l) {
    std::string s(1, l.kind == Gen::Sigma ? 's' : l.kind == Gen::Alpha ? 'a' : 'b');
    s += std::to_string(l.index);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
    return s;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (auto& l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += to_string(l);
    }
    return s;
}

namespace {

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Word parse_word(std::string_view text, Context ctx) {
    if (text == "1") return Word(ctx);
    if (text.empty()) throw ParseError("", 0, "empty text (the empty word is written 1)");
    std::vector<Letter> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t sp = text.find(' ', pos);
        std::string_view tok = text.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
        std::string t(tok);
        if (tok.empty()) throw ParseError(t, pos, "empty token (tokens are separated by single spaces)");
        Gen k;
        switch (tok[0]) {
            case 'a': k = Gen::Alpha; break;
            case 'b': k = Gen::Beta; break;
            case 's': k = Gen::Sigma; break;
            default: throw ParseError(t, pos, "expected a, b or s");
        }
        std::string_view rest = tok.substr(1);
        std::string_view idx = rest, ex;
        if (auto c = rest.find('^'); c != std::string_view::npos) {
            idx = rest.substr(0, c);
            ex = rest.substr(c + 1);
            if (ex.empty()) throw ParseError(t, pos, "missing exponent after ^");
        }
        long long i = 0, e = 1;
        if (idx.empty() || idx[0] == '+' || idx[0] == '-' || !parse_int(idx, i) || i < 1)
            throw ParseError(t, pos, "index must be a positive integer");
        if (i > 1'000'000'000) throw ParseError(t, pos, "index too large");
        if (!ex.empty() && (ex[0] == '+' || !parse_int(ex, e)))
            throw ParseError(t, pos, "exponent must be an integer");
        if (e == 0) throw ParseError(t, pos, "exponent must be nonzero");
        Letter l{k, static_cast<int>(i), e};
        if (k == Gen::Sigma && (i > 2 * ctx.n - 1))
            throw ParseError(t, pos, "sigma index outside [1," + std::to_string(2 * ctx.n - 1) + "]");
        if (k != Gen::Sigma && ctx.g < 1) throw ParseError(t, pos, "genus 0 context has no alpha/beta");
        out.push_back(l);
        if (sp == std::string_view::npos) break;
        pos = sp + 1;
        if (pos == text.size()) throw ParseError("", pos, "trailing space");
    }
    return Word(ctx, std::move(out));
}

const char* move_name(Move m) {
    switch (m) {
        case Move::M1: return "M1";
        case Move::M2: return "M2";
        case Move::M3: return "M3";
        case Move::M4: return "M4";
        case Move::M5: return "M5";
        case Move::M6: return "M6";
        case Move::PslStar: return "PslStar";
        case Move::Psl: return "Psl";
    }
    return "?";
}

MoveSpec parse_move(std::string_view text) {
    MoveSpec m;
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto c = text.find(':', pos);
        parts.push_back(text.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
        if (c == std::string_view::npos) break;
        pos = c + 1;
    }
    std::string name(parts[0]);
    for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    static const std::pair<const char*, Move> names[] = {
        {"m1", Move::M1}, {"m2", Move::M2}, {"m3", Move::M3}, {"m4", Move::M4},
        {"m5", Move::M5}, {"m6", Move::M6}, {"pslstar", Move::PslStar}, {"psl*", Move::PslStar},
        {"psl", Move::Psl}};
    bool found = false;
    for (auto& [s, mv] : names)
        if (name == s) { m.move = mv; found = true; }
    if (!found) throw InputError("unknown move '" + std::string(parts[0]) + "'");
    if (m.move == Move::Psl) m.side = Side::Left;
    for (std::size_t k = 1; k < parts.size(); ++k) {
        std::string_view p = parts[k];
        long long v = 0;
        if (p == "left" || p == "l") m.side = Side::Left;
        else if (p == "right" || p == "r") m.side = Side::Right;
        else if (p == "inv" || p == "invert") m.invert = true;
        else if (p == "apply") m.invert = false;
        else if (parse_int(p, v) && v >= -1'000'000 && v <= 1'000'000) m.param = static_cast<int>(v);
        else throw InputError("bad move field '" + std::string(p) + "'");
    }
    if ((m.move == Move::PslStar && m.side == Side::Left) || (m.move == Move::Psl && m.side == Side::Right))
        throw InputError(std::string(move_name(m.move)) + " acts on one side only");
    return m;
}

std::string to_string(const MoveSpec& m) {
    std::string s = move_name(m.move);
    if (m.move != Move::M6 && m.move != Move::PslStar && m.move != Move::Psl)
        s += m.side == Side::Left ? ":left" : ":right";
    if (m.move == Move::M2 || m.move == Move::M4 || m.move == Move::M5 || m.move == Move::M6 ||
        m.move == Move::PslStar || m.move == Move::Psl)
        s += ":" + std::to_string(m.param);
    if (m.invert) s += ":inv";
    return s;
}

}  // namespace pd
