#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/tableaux.hpp"

// Marginally large tableaux with a finite encoding: row i stores only the
// entries strictly greater than i, and the number of i's in row i is implied
// (one more than the number of boxes in row i+1).  The left-infinite rows are
// never materialized; the implied prefix is exactly the truncation bound the
// signature computation needs.

namespace klrtab {

struct MLTableau {
    int n = 0;
    std::vector<std::vector<int>> excess;  // excess[i-1]: entries > i in row i

    MLTableau() = default;
    MLTableau(int rank, std::vector<std::vector<int>> ex)
        : n(rank), excess(std::move(ex)) {
        if (n < 1) throw std::domain_error("MLTableau: rank must be positive");
        if (static_cast<int>(excess.size()) != n)
            throw std::domain_error("MLTableau: one excess list per row expected");
        for (int i = 1; i <= n; ++i) {
            const auto& row = excess[static_cast<size_t>(i - 1)];
            for (size_t j = 0; j < row.size(); ++j) {
                if (row[j] <= i || row[j] > n + 1)
                    throw std::domain_error("MLTableau: excess entry out of range");
                if (j + 1 < row.size() && row[j] > row[j + 1])
                    throw std::domain_error("MLTableau: excess entries must weakly increase");
            }
        }
    }

    static MLTableau highest(int rank) {
        return MLTableau(rank, std::vector<std::vector<int>>(static_cast<size_t>(rank)));
    }

    // visible boxes per row, bottom-up recursion
    std::vector<int> totals() const {
        std::vector<int> t(static_cast<size_t>(n), 0);
        for (int i = n; i >= 1; --i) {
            int below = (i == n) ? 0 : t[static_cast<size_t>(i)];
            t[static_cast<size_t>(i - 1)] =
                below + 1 + static_cast<int>(excess[static_cast<size_t>(i - 1)].size());
        }
        return t;
    }

    // number of i's in row i
    int prefix_count(int i, const std::vector<int>& tot) const {
        return (i == n ? 0 : tot[static_cast<size_t>(i)]) + 1;
    }

    // canonical finite window, one ordinary tableau
    Tableau finite_tableau() const {
        std::vector<int> tot = totals();
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> row(static_cast<size_t>(prefix_count(i, tot)), i);
            const auto& ex = excess[static_cast<size_t>(i - 1)];
            row.insert(row.end(), ex.begin(), ex.end());
            rows.push_back(std::move(row));
        }
        return Tableau::from_rows(std::move(rows));
    }

    bool operator==(const MLTableau&) const = default;

    std::string to_string() const {
        std::string s = "n" + std::to_string(n) + ":";
        for (size_t i = 0; i < excess.size(); ++i) {
            if (i) s += "|";
            for (size_t j = 0; j < excess[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(excess[i][j]);
            }
        }
        return s;
    }
};

namespace detail {

inline void ml_validate(const MLTableau& t, const char* who) {
    if (!validate_ssyt(t.finite_tableau(), t.n))
        throw std::logic_error(std::string(who) + ": finite window is not semistandard");
}

}  // namespace detail

// Lowering operator.  Always defined: the rightmost implied i in row i keeps
// an uncancelled '+' in the signature, so the acting box is always inside
// the finite window.
inline MLTableau ml_f(const MLTableau& t, int i) {
    if (i < 1 || i > t.n) throw std::domain_error("ml_f: letter out of range");
    std::vector<ReadPos> pos;
    Word w = far_eastern_reading(t.finite_tableau(), &pos);
    auto sig = detail::bracket_signature(w, i);
    if (sig.plus.empty()) throw std::logic_error("ml_f: no acting '+' in finite window");
    ReadPos at = pos[sig.plus.front()];
    std::vector<int> tot = t.totals();
    int pc = t.prefix_count(at.row, tot);
    MLTableau r = t;
    auto& ex = r.excess[static_cast<size_t>(at.row - 1)];
    if (at.col <= pc) {
        if (at.row != i || at.col != pc)
            throw std::logic_error("ml_f: acting '+' is not the rightmost implied entry");
        ex.insert(ex.begin(), i + 1);
    } else {
        size_t idx = static_cast<size_t>(at.col - pc - 1);
        if (ex.at(idx) != i || (idx + 1 < ex.size() && ex[idx + 1] == i))
            throw std::logic_error("ml_f: acting '+' is not the last of its run");
        ex[idx] = i + 1;
    }
    detail::ml_validate(r, "ml_f");
    return r;
}

// Raising operator; null when the i-signature has no '-'.
inline std::optional<MLTableau> ml_e(const MLTableau& t, int i) {
    if (i < 1 || i > t.n) throw std::domain_error("ml_e: letter out of range");
    std::vector<ReadPos> pos;
    Word w = far_eastern_reading(t.finite_tableau(), &pos);
    auto sig = detail::bracket_signature(w, i);
    if (sig.minus.empty()) return std::nullopt;
    ReadPos at = pos[sig.minus.back()];
    std::vector<int> tot = t.totals();
    int pc = t.prefix_count(at.row, tot);
    if (at.col <= pc) throw std::logic_error("ml_e: acting '-' fell on an implied entry");
    MLTableau r = t;
    auto& ex = r.excess[static_cast<size_t>(at.row - 1)];
    size_t idx = static_cast<size_t>(at.col - pc - 1);
    if (ex.at(idx) != i + 1 || (idx > 0 && ex[idx - 1] == i + 1))
        throw std::logic_error("ml_e: acting '-' is not the first of its run");
    if (i == at.row) {
        if (idx != 0) throw std::logic_error("ml_e: absorbed entry must be leftmost");
        ex.erase(ex.begin());
    } else {
        ex[idx] = i;
    }
    detail::ml_validate(r, "ml_e");
    return r;
}

// Root lattice vector lambda_drop with wt(T) = -lambda_drop in P; the
// alpha_j coefficient counts excess boxes in rows <= j with entry > j.
inline RootVector ml_root_drop(const MLTableau& t) {
    RootVector d = RootVector::zero(t.n);
    for (int j = 1; j <= t.n; ++j) {
        int c = 0;
        for (int m = 1; m <= j; ++m)
            for (int e : t.excess[static_cast<size_t>(m - 1)])
                if (e >= j + 1) ++c;
        d.alpha[static_cast<size_t>(j - 1)] = c;
    }
    return d;
}

inline Weight ml_wt(const MLTableau& t) {
    Weight w = weight_from_root(ml_root_drop(t));
    for (auto& c : w.omega) c = -c;
    return w;
}

inline int ml_eps(const MLTableau& t, int i) {
    if (i < 1 || i > t.n) throw std::domain_error("ml_eps: letter out of range");
    return word_eps(far_eastern_reading(t.finite_tableau()), i);
}

inline int ml_phi(const MLTableau& t, int i) {
    return ml_eps(t, i) + ml_wt(t).pairing(i);
}

// Embedding of a semistandard tableau: pad to n rows and keep, per row i,
// only the entries greater than i; the implied prefix supplies the i's.
inline MLTableau iota_lambda(const Tableau& t, int n) {
    require_ssyt(t, n, "iota_lambda");
    if (t.row_count() > n) throw std::domain_error("iota_lambda: too many rows for rank");
    std::vector<std::vector<int>> ex(static_cast<size_t>(n));
    for (int i = 1; i <= t.row_count(); ++i)
        for (int e : t.rows[static_cast<size_t>(i - 1)])
            if (e > i) ex[static_cast<size_t>(i - 1)].push_back(e);
    MLTableau r(n, std::move(ex));
    detail::ml_validate(r, "iota_lambda");
    return r;
}

// Row k read right to left with k subtracted; finitely many nonzero values.
inline std::vector<Partition> psi_infinity(const MLTableau& t) {
    std::vector<Partition> mus;
    mus.reserve(static_cast<size_t>(t.n));
    for (int k = 1; k <= t.n; ++k) {
        const auto& ex = t.excess[static_cast<size_t>(k - 1)];
        std::vector<int> parts;
        parts.reserve(ex.size());
        for (size_t j = ex.size(); j-- > 0;) parts.push_back(ex[j] - k);
        mus.push_back(Partition(std::move(parts)).trimmed());
    }
    return mus;
}

}  // namespace klrtab
