#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/laurent.hpp"

// Word characters with Laurent coefficients: concatenation and (quantum)
// shuffle products, the Serre-relation test, restriction to a last letter,
// and the one-word character of the rank-one simple of length m.

namespace klrtab {

namespace detail {

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

struct QChar {
    RootVector alpha;
    std::unordered_map<Word, LaurentPoly, detail::WordHash> terms;

    QChar() = default;
    explicit QChar(RootVector a) : alpha(std::move(a)) {}

    // character of the trivial module: one empty word
    static QChar unit(int n) {
        QChar c(RootVector::zero(n));
        c.terms.emplace(Word{}, LaurentPoly::one());
        return c;
    }

    static QChar single_word(const Word& w, int n, LaurentPoly coeff = LaurentPoly::one()) {
        QChar c(weight_of_word(w, n));
        if (!coeff.is_zero()) c.terms.emplace(w, std::move(coeff));
        return c;
    }

    int rank() const { return alpha.rank(); }
    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }

    void add_term(const Word& w, const LaurentPoly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(w, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    LaurentPoly coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? LaurentPoly() : it->second;
    }

    long long coeff_at_one(const Word& w) const { return coeff(w).at_one(); }

    // forget the grading
    QChar at_one() const {
        QChar r(alpha);
        for (const auto& [w, p] : terms) {
            long long v = p.at_one();
            if (v != 0) r.terms.emplace(w, LaurentPoly::term(v));
        }
        return r;
    }

    // shift every coefficient so the smallest q-power present is 0
    QChar normalized_lowest_degree() const {
        if (terms.empty()) return *this;
        int lo = 0;
        bool first = true;
        for (const auto& [w, p] : terms) {
            int d = p.min_degree();
            if (first || d < lo) lo = d;
            first = false;
        }
        QChar r(alpha);
        for (const auto& [w, p] : terms) r.terms.emplace(w, p.shifted(-lo));
        return r;
    }

    std::vector<Word> sorted_words() const {
        std::vector<Word> ws;
        ws.reserve(terms.size());
        for (const auto& [w, p] : terms) ws.push_back(w);
        std::sort(ws.begin(), ws.end());
        return ws;
    }

    bool operator==(const QChar& o) const { return alpha == o.alpha && terms == o.terms; }

    std::string to_string() const {
        std::string s;
        for (const Word& w : sorted_words()) {
            if (!s.empty()) s += " + ";
            s += "(" + terms.at(w).to_string() + ")*[";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(w[i]);
            }
            s += "]";
        }
        return s.empty() ? "0" : s;
    }
};

inline QChar concat(const QChar& a, const QChar& b) {
    QChar r(a.alpha + b.alpha);
    for (const auto& [u, pu] : a.terms)
        for (const auto& [v, pv] : b.terms) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add_term(w, pu * pv);
        }
    return r;
}

namespace detail {

// All interleavings of u and v accumulated into out.  When graded, a letter
// y of v landing left of a letter x of u contributes q^{-(alpha_x|alpha_y)}.
inline void shuffle_words(const Word& u, const Word& v, const LaurentPoly& base, bool graded,
                          QChar& out) {
    const size_t lu = u.size(), lv = v.size();
    // pair_suffix[i][j] = sum over t >= i of (alpha_{u_t} | alpha_{v_j})
    std::vector<std::vector<int>> pair_suffix;
    if (graded) {
        pair_suffix.assign(lu + 1, std::vector<int>(lv, 0));
        for (size_t i = lu; i-- > 0;)
            for (size_t j = 0; j < lv; ++j)
                pair_suffix[i][j] = pair_suffix[i + 1][j] + cartan_entry(u[i], v[j]);
    }
    Word built(lu + lv, 0);
    std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t j, int exp) {
        if (i == lu && j == lv) {
            out.add_term(built, graded ? base.shifted(exp) : base);
            return;
        }
        size_t p = i + j;
        if (i < lu) {
            built[p] = u[i];
            rec(i + 1, j, exp);
        }
        if (j < lv) {
            built[p] = v[j];
            rec(i, j + 1, exp - (graded ? pair_suffix[i][j] : 0));
        }
    };
    rec(0, 0, 0);
}

}  // namespace detail

// Sum over all interleavings of every word pair.
inline QChar shuffle(const QChar& a, const QChar& b, bool graded = false) {
    QChar r(a.alpha + b.alpha);
    for (const auto& [u, pu] : a.terms)
        for (const auto& [v, pv] : b.terms) detail::shuffle_words(u, v, pu * pv, graded, r);
    return r;
}

struct SerreReport {
    bool passed = true;
    std::string counterexample;
};

// Evaluated at q = 1: distant letters commute, and adjacent letters satisfy
// 2*c(..i,j,i..) = c(..j,i,i..) + c(..i,i,j..) in every context.
inline SerreReport serre_check(const QChar& a) {
    QChar c = a.at_one();
    auto value = [&](const Word& w) { return c.coeff_at_one(w); };
    for (const auto& [w, p] : c.terms) {
        long long cw = p.at_one();
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            int x = w[t], y = w[t + 1];
            int d = x > y ? x - y : y - x;
            if (d > 1) {
                Word s = w;
                std::swap(s[t], s[t + 1]);
                if (value(s) != cw) {
                    std::ostringstream os;
                    os << "commuting swap at position " << t << " of "
                       << QChar::single_word(w, a.rank()).to_string();
                    return {false, os.str()};
                }
            }
        }
        for (size_t t = 0; t + 2 < w.size(); ++t) {
            int x = w[t], y = w[t + 1], z = w[t + 2];
            // identify the {i,i,j} multiset with |i-j| = 1
            int i, j;
            if (x == y && (z == x + 1 || z == x - 1)) i = x, j = z;
            else if (x == z && (y == x + 1 || y == x - 1)) i = x, j = y;
            else if (y == z && (x == y + 1 || x == y - 1)) i = y, j = x;
            else continue;
            auto with = [&](int a1, int a2, int a3) {
                Word s = w;
                s[t] = a1, s[t + 1] = a2, s[t + 2] = a3;
                return value(s);
            };
            if (2 * with(i, j, i) != with(j, i, i) + with(i, i, j)) {
                std::ostringstream os;
                os << "Serre triple (" << i << "," << j << ") at position " << t << " of word";
                for (int l : w) os << " " << l;
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

// Largest k such that a word ending in k copies of i has nonzero coefficient.
inline int epsilon_i(const QChar& a, int i) {
    if (a.is_zero()) throw std::domain_error("epsilon_i: zero character");
    int best = 0;
    for (const auto& [w, p] : a.terms) {
        int k = 0;
        for (size_t t = w.size(); t-- > 0 && w[t] == i;) ++k;
        best = std::max(best, k);
    }
    return best;
}

// Keep the words whose last letter is i and strip it.
inline QChar e_i(const QChar& a, int i) {
    RootVector al = a.alpha;
    if (!a.is_zero()) {
        if (al.coeff(i) > 0) al.alpha[static_cast<size_t>(i - 1)] -= 1;
        else al = RootVector::zero(a.rank());
    }
    QChar r(al);
    for (const auto& [w, p] : a.terms) {
        if (w.empty() || w.back() != i) continue;
        Word s(w.begin(), w.end() - 1);
        r.add_term(s, p);
    }
    if (r.is_zero()) r.alpha = RootVector::zero(a.rank());
    return r;
}

// Character of the rank-one simple on the word (i,...,i): the coefficient is
// prod_{k=1}^{m} (1 + q^2 + ... + q^{2(k-1)}), so its value at q = 1 is m!.
inline QChar char_L_im(int i, int m, int n) {
    if (i < 1 || i > n) throw std::domain_error("char_L_im: letter out of range");
    if (m < 0) throw std::domain_error("char_L_im: negative power");
    LaurentPoly c = LaurentPoly::one();
    for (int k = 1; k <= m; ++k) {
        LaurentPoly factor;
        for (int e = 0; e < k; ++e) factor.add_term(2 * e, 1);
        c = c * factor;
    }
    return QChar::single_word(Word(static_cast<size_t>(m), i), n, c);
}

// Ungraded restriction identity for a product: e_i(A ** B) must equal
// A ** e_i(B) + e_i(A) ** B at q = 1.
inline bool ei_exactness_check(const QChar& a, const QChar& b, int i) {
    QChar lhs = e_i(shuffle(a, b), i).at_one();
    QChar rhs = shuffle(a, e_i(b, i)).at_one();
    for (const auto& [w, p] : shuffle(e_i(a, i), b).at_one().terms) rhs.add_term(w, p);
    if (lhs.terms.size() != rhs.terms.size()) return false;
    for (const auto& [w, p] : lhs.terms)
        if (!(rhs.coeff(w) == p)) return false;
    return true;
}

}  // namespace klrtab
