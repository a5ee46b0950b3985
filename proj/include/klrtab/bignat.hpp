#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrtab {

// Minimal unsigned big integer, base 1e9 limbs.  Only what the counting
// routines need: construction from u64, small multiply, add, compare,
// decimal printing.
struct BigNat {
    std::vector<uint32_t> limbs;  // little-endian, no leading zero limbs

    static constexpr uint32_t kBase = 1000000000u;

    BigNat() = default;
    BigNat(uint64_t v) {  // NOLINT: implicit on purpose
        while (v) {
            limbs.push_back(static_cast<uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    bool is_zero() const { return limbs.empty(); }

    void mul_small(uint32_t m) {
        if (m == 0) {
            limbs.clear();
            return;
        }
        uint64_t carry = 0;
        for (auto& l : limbs) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) {
            limbs.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    std::string to_string() const {
        if (limbs.empty()) return "0";
        std::string s = std::to_string(limbs.back());
        for (size_t i = limbs.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    bool operator==(const BigNat&) const = default;
};

// Exact product of numerator factors divided by denominator factors.  The
// denominators are cancelled into the numerators with gcds first, so the
// quotient must be an integer (throws otherwise).
inline BigNat exact_factor_quotient(std::vector<uint64_t> num, std::vector<uint64_t> den) {
    for (uint64_t d : den) {
        for (uint64_t& f : num) {
            if (d == 1) break;
            uint64_t g = std::gcd(d, f);
            if (g > 1) {
                d /= g;
                f /= g;
            }
        }
        if (d != 1) throw std::logic_error("exact_factor_quotient: quotient not integral");
    }
    BigNat r(1);
    for (uint64_t f : num) {
        if (f > UINT32_MAX) throw std::overflow_error("exact_factor_quotient: factor too large");
        r.mul_small(static_cast<uint32_t>(f));
    }
    return r;
}

}  // namespace klrtab
