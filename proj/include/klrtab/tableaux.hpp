#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klrtab/bignat.hpp"
#include "klrtab/cartan.hpp"

// Young diagrams, semistandard tableaux, the two reading words, the
// row-partition encoding of a tableau and its inverse, and counting.

namespace klrtab {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, >= 0; trailing zeros allowed

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw std::domain_error("Partition: negative part");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::domain_error("Partition: parts not weakly decreasing");
        }
    }

    long long boxes() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }

    // number of nonzero parts
    int length() const {
        int l = 0;
        for (int p : parts)
            if (p > 0) ++l;
        return l;
    }

    int part(size_t i) const { return i < parts.size() ? parts[i] : 0; }

    // canonical form with trailing zeros stripped
    Partition trimmed() const {
        Partition r = *this;
        while (!r.parts.empty() && r.parts.back() == 0) r.parts.pop_back();
        return r;
    }

    Partition conjugate() const {
        Partition r;
        if (parts.empty() || parts[0] == 0) return r;
        r.parts.assign(static_cast<size_t>(parts[0]), 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) r.parts[static_cast<size_t>(j)] += 1;
        return r;
    }

    // every part lowered by one, zero parts dropped
    Partition lowered() const {
        std::vector<int> q;
        for (int p : parts)
            if (p > 1) q.push_back(p - 1);
        return Partition(std::move(q));
    }

    bool operator==(const Partition& o) const { return trimmed().parts == o.trimmed().parts; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// Product of factorials of the conjugate parts.
inline uint64_t transpose_factorial(const Partition& mu) {
    Partition c = mu.conjugate();
    unsigned __int128 r = 1;
    for (int p : c.parts)
        for (int f = 2; f <= p; ++f) {
            r *= static_cast<unsigned>(f);
            if (r > UINT64_MAX) throw std::overflow_error("transpose_factorial: overflow");
        }
    return static_cast<uint64_t>(r);
}

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    Tableau(Partition sh, std::vector<std::vector<int>> rw)
        : shape(std::move(sh)), rows(std::move(rw)) {
        Partition t = shape.trimmed();
        if (rows.size() < t.parts.size()) throw std::domain_error("Tableau: missing rows");
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape.part(i))
                throw std::domain_error("Tableau: row length does not match shape");
        }
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
    }

    static Tableau from_rows(std::vector<std::vector<int>> rw) {
        std::vector<int> sh;
        sh.reserve(rw.size());
        for (auto& r : rw) sh.push_back(static_cast<int>(r.size()));
        return Tableau(Partition(std::move(sh)), std::move(rw));
    }

    // filling of shape lambda with row i constant equal to i
    static Tableau highest_weight(const Partition& lambda) {
        std::vector<std::vector<int>> rw;
        for (size_t i = 0; i < lambda.parts.size(); ++i)
            if (lambda.parts[i] > 0)
                rw.emplace_back(static_cast<size_t>(lambda.parts[i]), static_cast<int>(i) + 1);
        return Tableau(lambda.trimmed(), std::move(rw));
    }

    int entry(int row, int col) const {  // 1-based
        return rows.at(static_cast<size_t>(row - 1)).at(static_cast<size_t>(col - 1));
    }

    int row_count() const { return static_cast<int>(rows.size()); }

    bool operator==(const Tableau& o) const { return rows == o.rows; }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) s += ";";
            for (size_t j = 0; j < rows[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(rows[i][j]);
            }
        }
        return s;
    }
};

// Rows weakly increase, columns strictly increase, entries in 1..n+1.
inline bool validate_ssyt(const Tableau& t, int n) {
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > n + 1) return false;
            if (j + 1 < row.size() && row[j] > row[j + 1]) return false;
            if (i + 1 < t.rows.size() && j < t.rows[i + 1].size() &&
                row[j] >= t.rows[i + 1][j])
                return false;
        }
    }
    return true;
}

inline void require_ssyt(const Tableau& t, int n, const char* who) {
    if (!validate_ssyt(t, n)) throw std::domain_error(std::string(who) + ": tableau is not semistandard");
}

// Reading positions are returned so crystal operators can map a changed
// letter back to its box.
struct ReadPos {
    int row, col;  // 1-based
};

enum class Reading { MiddleEastern, FarEastern };

// Across the rows, right to left, top to bottom.
inline Word middle_eastern_reading(const Tableau& t, std::vector<ReadPos>* pos = nullptr) {
    Word w;
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = t.rows[i].size(); j-- > 0;) {
            w.push_back(t.rows[i][j]);
            if (pos) pos->push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
        }
    return w;
}

// Down the columns, top to bottom, rightmost column first.
inline Word far_eastern_reading(const Tableau& t, std::vector<ReadPos>* pos = nullptr) {
    Word w;
    int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    for (int c = width; c >= 1; --c)
        for (size_t i = 0; i < t.rows.size(); ++i) {
            if (static_cast<int>(t.rows[i].size()) >= c) {
                w.push_back(t.rows[i][static_cast<size_t>(c - 1)]);
                if (pos) pos->push_back({static_cast<int>(i) + 1, c});
            }
        }
    return w;
}

inline Word reading(const Tableau& t, Reading r, std::vector<ReadPos>* pos = nullptr) {
    return r == Reading::MiddleEastern ? middle_eastern_reading(t, pos)
                                       : far_eastern_reading(t, pos);
}

// Row k, read right to left, with k subtracted from each entry.  Keeps the
// zero parts so each result has exactly shape-part(k) entries.
inline std::vector<Partition> psi_lambda(const Tableau& t, int n) {
    require_ssyt(t, n, "psi_lambda");
    std::vector<Partition> mus;
    mus.reserve(t.rows.size());
    for (size_t k = 0; k < t.rows.size(); ++k) {
        std::vector<int> parts;
        parts.reserve(t.rows[k].size());
        for (size_t j = t.rows[k].size(); j-- > 0;)
            parts.push_back(t.rows[k][j] - static_cast<int>(k) - 1);
        mus.push_back(Partition(std::move(parts)));
    }
    return mus;
}

struct reconstruction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rebuild the tableau with entry(k, j) = mu^(k)[shape_k - j + 1] + k and check
// the result is a valid semistandard filling.
inline Tableau psi_inverse(const Partition& shape, const std::vector<Partition>& mus, int n) {
    Partition sh = shape.trimmed();
    if (mus.size() != sh.parts.size())
        throw std::domain_error("psi_inverse: one partition per row expected");
    std::vector<std::vector<int>> rows;
    for (size_t k = 0; k < sh.parts.size(); ++k) {
        size_t len = static_cast<size_t>(sh.parts[k]);
        if (mus[k].parts.size() != len)
            throw std::domain_error("psi_inverse: partition length must equal row length");
        std::vector<int> row(len);
        for (size_t j = 0; j < len; ++j)
            row[j] = mus[k].parts[len - 1 - j] + static_cast<int>(k) + 1;
        rows.push_back(std::move(row));
    }
    Tableau t(sh, std::move(rows));
    if (!validate_ssyt(t, n))
        throw reconstruction_error("psi_inverse: partitions are not the image of a semistandard tableau");
    return t;
}

inline Weight tableau_weight(const Tableau& t, int n) {
    Weight w = Weight::zero(n);
    for (const auto& row : t.rows)
        for (int e : row) w = w + entry_weight(e, n);
    return w;
}

namespace detail {

inline uint64_t count_ssyt_enumerate(const Partition& shape, int m) {
    Partition sh = shape.trimmed();
    if (sh.parts.empty()) return 1;
    if (static_cast<int>(sh.parts.size()) > m) return 0;
    std::vector<std::vector<int>> rows;
    for (int p : sh.parts) rows.emplace_back(static_cast<size_t>(p), 0);
    uint64_t count = 0;
    std::function<void(size_t, size_t)> fill = [&](size_t i, size_t j) {
        if (i == rows.size()) {
            ++count;
            return;
        }
        size_t ni = i, nj = j + 1;
        if (nj == rows[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            rows[i][j] = v;
            fill(ni, nj);
        }
    };
    fill(0, 0);
    return count;
}

inline BigNat count_ssyt_hook_content(const Partition& shape, int m) {
    Partition sh = shape.trimmed();
    if (sh.parts.empty()) return BigNat(1);
    if (static_cast<int>(sh.parts.size()) > m) return BigNat(0);
    Partition conj = sh.conjugate();
    std::vector<uint64_t> num, den;
    for (size_t i = 0; i < sh.parts.size(); ++i)
        for (int j = 1; j <= sh.parts[i]; ++j) {
            long long content = j - static_cast<long long>(i) - 1;
            num.push_back(static_cast<uint64_t>(m + content));
            long long arm = sh.parts[i] - j;
            long long leg = conj.parts[static_cast<size_t>(j - 1)] - static_cast<long long>(i) - 1;
            den.push_back(static_cast<uint64_t>(arm + leg + 1));
        }
    return exact_factor_quotient(std::move(num), std::move(den));
}

}  // namespace detail

// Number of semistandard fillings with entries in 1..m.  The product formula
// is the primary method; on small shapes the exhaustive enumeration must
// agree or the call aborts.
inline BigNat count_ssyt(const Partition& shape, int m) {
    if (m < 1) throw std::domain_error("count_ssyt: max entry must be >= 1");
    BigNat product = detail::count_ssyt_hook_content(shape, m);
    if (shape.boxes() <= 12 && m <= 8) {
        uint64_t enumerated = detail::count_ssyt_enumerate(shape, m);
        if (!(product == BigNat(enumerated)))
            throw std::logic_error("count_ssyt: product formula and enumeration disagree");
    }
    return product;
}

// Data of the smallest removable letter of a non-highest-weight tableau: the
// letter, how many boxes attain it, and the tableau with every such letter
// replaced.
struct DescentData {
    int letter = 0;       // i_T
    int multiplicity = 0; // number of attaining boxes
    Tableau raised;       // entries letter+1 replaced by letter in rows 1..letter
};

inline DescentData i_T_epsilon_Tplus(const Tableau& t, int n) {
    require_ssyt(t, n, "i_T_epsilon_Tplus");
    std::vector<Partition> mus = psi_lambda(t, n);
    int best = 0;
    bool found = false;
    for (size_t i = 0; i < mus.size(); ++i)
        for (int p : mus[i].parts)
            if (p > 0) {
                int v = p + static_cast<int>(i);
                if (!found || v < best) best = v;
                found = true;
            }
    if (!found) throw std::domain_error("i_T_epsilon_Tplus: highest-weight tableau has no descent");
    int eps = 0;
    for (size_t i = 0; i < mus.size(); ++i)
        for (int p : mus[i].parts)
            if (p > 0 && p + static_cast<int>(i) == best) ++eps;

    Tableau plus = t;
    for (int r = 1; r <= best && r <= plus.row_count(); ++r)
        for (auto& e : plus.rows[static_cast<size_t>(r - 1)])
            if (e == best + 1) e = best;
    if (!validate_ssyt(plus, n))
        throw std::logic_error("i_T_epsilon_Tplus: raised tableau is not semistandard");
    return DescentData{best, eps, std::move(plus)};
}

}  // namespace klrtab
