#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

// Sparse Laurent polynomials in q with exact integer coefficients.

namespace klrtab {

struct LaurentPoly {
    std::map<int, long long> coeffs;  // exponent -> coefficient, no zeros stored

    LaurentPoly() = default;
    static LaurentPoly term(long long c, int exp = 0) {
        LaurentPoly p;
        if (c != 0) p.coeffs[exp] = c;
        return p;
    }
    static LaurentPoly one() { return term(1); }

    bool is_zero() const { return coeffs.empty(); }

    void add_term(int exp, long long c) {
        if (c == 0) return;
        auto it = coeffs.find(exp);
        if (it == coeffs.end()) {
            coeffs[exp] = c;
        } else if ((it->second += c) == 0) {
            coeffs.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.coeffs) add_term(e, c);
        return *this;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto [e1, c1] : coeffs)
            for (auto [e2, c2] : o.coeffs) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    // multiply by q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto [e, c] : coeffs) r.coeffs[e + k] = c;
        return r;
    }

    int min_degree() const {
        if (coeffs.empty()) throw std::domain_error("min_degree of zero polynomial");
        return coeffs.begin()->first;
    }

    long long at_one() const {
        long long s = 0;
        for (auto [e, c] : coeffs) s += c;
        return s;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (auto [e, c] : coeffs) {
            if (!s.empty()) s += c >= 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            long long a = c < 0 ? -c : c;
            if (e == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "q";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }
};

// q-integer [m] = q^{-(m-1)} + q^{-(m-3)} + ... + q^{m-1}
inline LaurentPoly q_integer(int m) {
    LaurentPoly p;
    for (int e = -(m - 1); e <= m - 1; e += 2) p.add_term(e, 1);
    return p;
}

}  // namespace klrtab
