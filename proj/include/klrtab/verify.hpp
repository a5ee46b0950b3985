#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "klrtab/binfinity.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/segments.hpp"

// Desk-scale verification sweeps.  Each returns a report naming every
// witness that failed; an empty failure list is a pass.

namespace klrtab {

struct SweepReport {
    std::string name;
    size_t cases = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }

    void fail(std::string check, std::string witness, std::string detail = "") {
        failures.push_back({std::move(check), std::move(witness), std::move(detail)});
    }
};

namespace detail {

inline std::vector<Partition> partitions_up_to(int max_boxes, int max_parts = -1) {
    std::vector<Partition> all;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        all.push_back(Partition(cur));
        if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_boxes, max_boxes);
    return all;
}

}  // namespace detail

// Crystal sizes against the two counting methods.
inline SweepReport counting_sweep(int max_boxes, int max_rank) {
    SweepReport r;
    r.name = "counting";
    for (int n = 1; n <= max_rank; ++n)
        for (const Partition& lambda : detail::partitions_up_to(max_boxes, n)) {
            CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n);
            BigNat counted = count_ssyt(lambda, n + 1);
            ++r.cases;
            if (!(counted == BigNat(static_cast<uint64_t>(g.size()))))
                r.fail("count", "n=" + std::to_string(n) + " lambda=" + lambda.to_string(),
                       "bfs=" + std::to_string(g.size()) + " formula=" + counted.to_string());
        }
    return r;
}

// Operator agreement between the two readings on every vertex.
inline SweepReport reading_sweep(int max_boxes, int max_rank) {
    SweepReport r;
    r.name = "reading-independence";
    for (int n = 1; n <= max_rank; ++n)
        for (const Partition& lambda : detail::partitions_up_to(max_boxes, n)) {
            CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n);
            for (const Tableau& t : g.vertices)
                for (int i = 1; i <= n; ++i) {
                    ++r.cases;
                    bool ok = tableau_e(t, i, n, Reading::MiddleEastern) ==
                                  tableau_e(t, i, n, Reading::FarEastern) &&
                              tableau_f(t, i, n, Reading::MiddleEastern) ==
                                  tableau_f(t, i, n, Reading::FarEastern);
                    if (!ok)
                        r.fail("reading", t.to_string(), "letter " + std::to_string(i));
                }
        }
    return r;
}

// Serre relations on every induced character over whole crystals.
inline SweepReport serre_sweep(const std::vector<Partition>& shapes, int n) {
    SweepReport r;
    r.name = "serre";
    for (const Partition& lambda : shapes) {
        CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n);
        for (const Tableau& t : g.vertices) {
            ++r.cases;
            SerreReport sr = serre_check(induced_char(s_T(t, n), n));
            if (!sr.passed) r.fail("serre", t.to_string(), sr.counterexample);
        }
    }
    return r;
}

// Distinguished-word multiplicities over all small partitions.
inline SweepReport multiplicity_sweep(int max_mu, int n) {
    SweepReport r;
    r.name = "multiplicity";
    for (const Partition& mu : detail::partitions_up_to(max_mu)) {
        int top = mu.parts.empty() ? 0 : mu.parts[0];
        for (int k = 1; k + top - 1 <= n; ++k) {
            ++r.cases;
            if (!multiplicity_certificate(mu, k, n))
                r.fail("multiplicity", "mu=" + mu.to_string() + " k=" + std::to_string(k));
        }
    }
    return r;
}

// The two orderings of a row block give the same character, exactly at q=1
// and up to one global power of q when graded.
inline SweepReport reorder_sweep(int max_mu, int n) {
    SweepReport r;
    r.name = "reorder";
    for (const Partition& mu : detail::partitions_up_to(max_mu)) {
        int top = mu.parts.empty() ? 0 : mu.parts[0];
        for (int k = 1; k + top - 1 <= n; ++k) {
            ++r.cases;
            std::string witness = "mu=" + mu.to_string() + " k=" + std::to_string(k);
            QChar plain_a = induced_char(s_mu(mu, k, n), n).at_one();
            QChar plain_b = induced_char(s_mu_tilde(mu, k, n), n).at_one();
            if (!(plain_a == plain_b)) {
                r.fail("reorder-q1", witness);
                continue;
            }
            QChar graded_a = induced_char(s_mu(mu, k, n), n, true).normalized_lowest_degree();
            QChar graded_b =
                induced_char(s_mu_tilde(mu, k, n), n, true).normalized_lowest_degree();
            if (!(graded_a == graded_b)) r.fail("reorder-graded", witness);
        }
    }
    return r;
}

// Trailing-letter counts and the factorial drop of right-justified blocks.
inline SweepReport hook_sweep(int max_mu, int n) {
    SweepReport r;
    r.name = "hook-epsilon";
    for (const Partition& mu : detail::partitions_up_to(max_mu)) {
        if (mu.parts.empty()) continue;
        for (int k = mu.parts[0]; k <= n; ++k) {
            ++r.cases;
            std::string witness = "mu=" + mu.to_string() + " k=" + std::to_string(k);
            QChar c = induced_char(s_hat_mu(mu, k, n), n);
            int parts = mu.length();
            if (epsilon_i(c, k) != parts) {
                r.fail("hook-eps", witness);
                continue;
            }
            QChar stripped = c;
            for (int t = 0; t < parts; ++t) stripped = e_i(stripped, k);
            long long fact = 1;
            for (int t = 2; t <= parts; ++t) fact *= t;
            QChar expect = induced_char(s_hat_mu(mu.lowered(), k - 1, n), n);
            bool ok = stripped.at_one().term_count() == expect.term_count();
            for (const auto& [w, p] : expect.terms)
                ok = ok && stripped.coeff_at_one(w) == fact * p.at_one();
            if (!ok) r.fail("hook-drop", witness);
        }
    }
    return r;
}

// Inverse property of the infinite-crystal operators plus the embedding
// checks over one full small crystal.
inline SweepReport binfinity_sweep(int trials, unsigned seed) {
    SweepReport r;
    r.name = "binfinity";
    std::mt19937 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        MLTableau t = MLTableau::highest(n);
        int steps = static_cast<int>(rng() % 12);
        for (int s = 0; s < steps; ++s) t = ml_f(t, 1 + static_cast<int>(rng() % n));
        int i = 1 + static_cast<int>(rng() % n);
        ++r.cases;
        if (!(ml_e(ml_f(t, i), i) == t)) r.fail("inverse", t.to_string());
    }

    const int n = 3;
    Partition lambda({2, 1});
    Weight lw = tableau_weight(Tableau::highest_weight(lambda), n);
    CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n);
    for (const Tableau& t : g.vertices) {
        MLTableau ml = iota_lambda(t, n);
        ++r.cases;
        bool ok = ml_wt(ml) == tableau_weight(t, n) - lw;
        auto inf = psi_infinity(ml);
        auto fin = psi_lambda(t, n);
        for (size_t k = 0; k < inf.size(); ++k)
            ok = ok && inf[k] == (k < fin.size() ? fin[k].trimmed() : Partition{});
        for (int i = 1; i <= n && ok; ++i) {
            auto up = tableau_e(t, i, n);
            if (up) ok = ml_e(ml, i) == iota_lambda(*up, n);
            ok = ok && tableau_eps(t, i) ==
                           std::max(ml_eps(ml, i), -tableau_weight(t, n).pairing(i));
        }
        if (!ok) r.fail("embedding", t.to_string());
    }
    return r;
}

// Factorial values of the rank-one simples plus the restriction identity on
// randomized segment products.
inline SweepReport nilhecke_sweep(int max_m, int trials, unsigned seed, int n = 6) {
    SweepReport r;
    r.name = "nilhecke";
    long long fact = 1;
    for (int m = 0; m <= max_m; ++m) {
        if (m) fact *= m;
        ++r.cases;
        if (char_L_im(1, m, n).coeff_at_one(Word(static_cast<size_t>(m), 1)) != fact)
            r.fail("dimension", "m=" + std::to_string(m));
    }
    std::mt19937 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int a1 = 1 + static_cast<int>(rng() % n);
        int l1 = 1 + static_cast<int>(rng() % (n - a1 + 1));
        int a2 = 1 + static_cast<int>(rng() % n);
        int l2 = 1 + static_cast<int>(rng() % (n - a2 + 1));
        QChar a = induced_char({{a1, l1}}, n);
        QChar b = induced_char({{a2, l2}}, n);
        for (int i = 1; i <= n; ++i) {
            ++r.cases;
            if (!ei_exactness_check(a, b, i))
                r.fail("exactness", "segments (" + std::to_string(a1) + ";" + std::to_string(l1) +
                                        "),(" + std::to_string(a2) + ";" + std::to_string(l2) +
                                        ") i=" + std::to_string(i));
        }
    }
    return r;
}

// verify_phi_lambda over every shape in the box/rank range.
inline SweepReport phi_sweep(int max_boxes, int max_rank, VerifyOptions opts = {}) {
    SweepReport r;
    r.name = "phi-lambda";
    for (int n = 1; n <= max_rank; ++n)
        for (const Partition& lambda : detail::partitions_up_to(max_boxes, n)) {
            PhiReport pr = verify_phi_lambda(lambda, n, opts);
            r.cases += pr.tableaux;
            for (const VerifyFailure& f : pr.failures) {
                VerifyFailure g = f;
                g.witness = "n=" + std::to_string(n) + " " + g.witness;
                r.failures.push_back(std::move(g));
            }
        }
    return r;
}

}  // namespace klrtab
