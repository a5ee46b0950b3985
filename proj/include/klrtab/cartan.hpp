#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Type A_n Cartan datum: weights in fundamental-weight coordinates, root
// lattice vectors in simple-root coordinates, and the conversions between
// them.  Everything here is a plain value; rank is carried by vector length.

namespace klrtab {

using Letter = int;               // simple-root index 1..n, or box entry 1..n+1
using Word = std::vector<Letter>;

inline int cartan_entry(int i, int j) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

// Element of the weight lattice P; omega[i-1] is the coefficient of the i-th
// fundamental weight, which equals the pairing with h_i.
struct Weight {
    std::vector<int> omega;

    Weight() = default;
    explicit Weight(std::vector<int> c) : omega(std::move(c)) {}
    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<size_t>(n), 0)); }

    int rank() const { return static_cast<int>(omega.size()); }
    int pairing(int i) const { return omega.at(static_cast<size_t>(i - 1)); }

    bool operator==(const Weight&) const = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
    if (a.omega.size() != b.omega.size()) throw std::domain_error("weight rank mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.omega.size(); ++i) r.omega[i] += b.omega[i];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    if (a.omega.size() != b.omega.size()) throw std::domain_error("weight rank mismatch");
    Weight r = a;
    for (size_t i = 0; i < r.omega.size(); ++i) r.omega[i] -= b.omega[i];
    return r;
}

// Element of the root lattice Q; alpha[i-1] is the coefficient of alpha_i.
struct RootVector {
    std::vector<int> alpha;

    RootVector() = default;
    explicit RootVector(std::vector<int> c) : alpha(std::move(c)) {}
    static RootVector zero(int n) { return RootVector(std::vector<int>(static_cast<size_t>(n), 0)); }

    int rank() const { return static_cast<int>(alpha.size()); }
    int coeff(int i) const { return alpha.at(static_cast<size_t>(i - 1)); }

    bool in_positive_cone() const {
        for (int c : alpha)
            if (c < 0) return false;
        return true;
    }

    long long height() const {
        long long h = 0;
        for (int c : alpha) h += c;
        return h;
    }

    bool operator==(const RootVector&) const = default;
};

inline RootVector operator+(const RootVector& a, const RootVector& b) {
    if (a.alpha.size() != b.alpha.size()) throw std::domain_error("root rank mismatch");
    RootVector r = a;
    for (size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] += b.alpha[i];
    return r;
}

inline RootVector operator-(const RootVector& a, const RootVector& b) {
    if (a.alpha.size() != b.alpha.size()) throw std::domain_error("root rank mismatch");
    RootVector r = a;
    for (size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] -= b.alpha[i];
    return r;
}

// Symmetric bilinear form on Q with (alpha_i | alpha_j) = a_ij.
inline long long bilinear(const RootVector& beta, const RootVector& gamma) {
    if (beta.alpha.size() != gamma.alpha.size())
        throw std::domain_error("bilinear: rank mismatch");
    const int n = beta.rank();
    long long s = 0;
    for (int i = 1; i <= n; ++i) {
        if (beta.coeff(i) == 0) continue;
        long long row = 2LL * gamma.coeff(i);
        if (i > 1) row -= gamma.coeff(i - 1);
        if (i < n) row -= gamma.coeff(i + 1);
        s += static_cast<long long>(beta.coeff(i)) * row;
    }
    return s;
}

// Image of a root lattice vector in P: the i-th coordinate is
// sum_j a_ij * alpha-coeff_j.
inline Weight weight_from_root(const RootVector& v) {
    const int n = v.rank();
    Weight w = Weight::zero(n);
    for (int i = 1; i <= n; ++i) {
        int c = 2 * v.coeff(i);
        if (i > 1) c -= v.coeff(i - 1);
        if (i < n) c -= v.coeff(i + 1);
        w.omega[static_cast<size_t>(i - 1)] = c;
    }
    return w;
}

// Weight of a single box entry e in 1..n+1 (the e-th coordinate vector of the
// standard basis, written in fundamental-weight coordinates).
inline Weight entry_weight(int entry, int n) {
    if (entry < 1 || entry > n + 1) throw std::domain_error("entry_weight: entry out of range");
    Weight w = Weight::zero(n);
    if (entry <= n) w.omega[static_cast<size_t>(entry - 1)] += 1;
    if (entry >= 2) w.omega[static_cast<size_t>(entry - 2)] -= 1;
    return w;
}

// Suffix sums a_i + ... + a_n; keeps trailing zeros so the result has one
// part per row index.
inline std::vector<int> dominant_to_partition(const std::vector<int>& a) {
    std::vector<int> parts(a.size(), 0);
    int acc = 0;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] < 0) throw std::domain_error("dominant_to_partition: negative coefficient");
        acc += a[i];
        parts[i] = acc;
    }
    return parts;
}

// Inverse of dominant_to_partition: a_i = lambda_i - lambda_{i+1}.
inline std::vector<int> partition_to_dominant(const std::vector<int>& parts, int n) {
    std::vector<int> a(static_cast<size_t>(n), 0);
    if (static_cast<int>(parts.size()) > n)
        throw std::domain_error("partition_to_dominant: too many parts for rank");
    for (size_t i = 0; i < parts.size(); ++i) {
        int next = (i + 1 < parts.size()) ? parts[i + 1] : 0;
        if (parts[i] < next) throw std::domain_error("partition_to_dominant: not a partition");
        a[i] = parts[i] - next;
    }
    return a;
}

// Root lattice vector of a word: coefficient of alpha_i = multiplicity of i.
inline RootVector weight_of_word(const Word& w, int n) {
    RootVector v = RootVector::zero(n);
    for (Letter x : w) {
        if (x < 1 || x > n) throw std::domain_error("weight_of_word: letter out of range");
        v.alpha[static_cast<size_t>(x - 1)] += 1;
    }
    return v;
}

inline RootVector simple_root(int i, int n) {
    RootVector v = RootVector::zero(n);
    v.alpha.at(static_cast<size_t>(i - 1)) = 1;
    return v;
}

}  // namespace klrtab
