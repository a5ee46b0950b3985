#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "klrtab/binfinity.hpp"
#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/qshuffle.hpp"
#include "klrtab/tableaux.hpp"

// Segment characters and everything built from them: the segment lists
// attached to a tableau, induced characters as iterated shuffles, the
// distinguished-word multiplicity certificate, the linking classification,
// the minimal-letter decomposition with its reordered segment lists, and the
// sweep that certifies the tableau-to-module correspondence.

namespace klrtab {

struct Segment {
    int start = 1;  // first letter
    int len = 0;    // number of letters; zero-length segments are trivial

    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;

    std::string to_string() const {
        return "(" + std::to_string(start) + ";" + std::to_string(len) + ")";
    }
};

using SegmentList = std::vector<Segment>;

inline void validate_segment(const Segment& s, int n) {
    if (s.start < 1 || s.len < 0) throw std::domain_error("segment: bad parameters");
    if (s.len > 0 && s.start + s.len - 1 > n)
        throw std::domain_error("segment: last letter exceeds rank");
}

// The increasing run (a, a+1, ..., a+len-1).
inline Word segment_word(const Segment& s, int n) {
    validate_segment(s, n);
    Word w(static_cast<size_t>(s.len));
    for (int t = 0; t < s.len; ++t) w[static_cast<size_t>(t)] = s.start + t;
    return w;
}

inline RootVector segment_root(const Segment& s, int n) {
    return weight_of_word(segment_word(s, n), n);
}

inline RootVector segment_list_root(const SegmentList& sl, int n) {
    RootVector r = RootVector::zero(n);
    for (const Segment& s : sl) r = r + segment_root(s, n);
    return r;
}

inline std::string segment_list_to_string(const SegmentList& sl) {
    std::string s = "[";
    for (size_t i = 0; i < sl.size(); ++i) {
        if (i) s += ",";
        s += sl[i].to_string();
    }
    return s + "]";
}

// Segments (k; mu_j) in partition order; zero parts are dropped.
inline SegmentList s_mu(const Partition& mu, int k, int n) {
    if (k < 1) throw std::domain_error("s_mu: block letter must be positive");
    SegmentList sl;
    for (int p : mu.parts)
        if (p > 0) {
            Segment s{k, p};
            validate_segment(s, n);
            sl.push_back(s);
        }
    return sl;
}

inline SegmentList s_mu_tilde(const Partition& mu, int k, int n) {
    SegmentList sl = s_mu(mu, k, n);
    std::reverse(sl.begin(), sl.end());
    return sl;
}

// Right-justified variant: every segment ends at the letter k.
inline SegmentList s_hat_mu(const Partition& mu, int k, int n) {
    SegmentList sl;
    for (int p : mu.parts)
        if (p > 0) {
            if (k - p + 1 < 1) throw std::domain_error("s_hat_mu: segment would start below 1");
            Segment s{k - p + 1, p};
            validate_segment(s, n);
            sl.push_back(s);
        }
    return sl;
}

inline SegmentList s_hat_mu_tilde(const Partition& mu, int k, int n) {
    SegmentList sl = s_hat_mu(mu, k, n);
    std::reverse(sl.begin(), sl.end());
    return sl;
}

// Block k comes last: rows are consumed from the bottom up.
inline SegmentList s_T(const Tableau& t, int n) {
    std::vector<Partition> mus = psi_lambda(t, n);
    SegmentList sl;
    for (size_t k = mus.size(); k-- > 0;) {
        SegmentList block = s_mu(mus[k], static_cast<int>(k) + 1, n);
        sl.insert(sl.end(), block.begin(), block.end());
    }
    return sl;
}

inline SegmentList s_T_infinity(const MLTableau& t) {
    std::vector<Partition> mus = psi_infinity(t);
    SegmentList sl;
    for (size_t k = mus.size(); k-- > 0;) {
        SegmentList block = s_mu(mus[k], static_cast<int>(k) + 1, t.n);
        sl.insert(sl.end(), block.begin(), block.end());
    }
    return sl;
}

inline size_t segment_list_letters(const SegmentList& sl) {
    size_t total = 0;
    for (const Segment& s : sl) total += static_cast<size_t>(s.len);
    return total;
}

// Left-fold shuffle of the segment words.
inline QChar induced_char(const SegmentList& sl, int n, bool graded = false) {
    QChar c = QChar::unit(n);
    for (const Segment& s : sl)
        c = shuffle(c, QChar::single_word(segment_word(s, n), n), graded);
    return c;
}

// Same fold, but gives up once the intermediate character exceeds the term
// budget.  Characters only grow along the fold, so the check is per step.
inline std::optional<QChar> induced_char_bounded(const SegmentList& sl, int n, bool graded,
                                                 size_t max_terms) {
    QChar c = QChar::unit(n);
    for (const Segment& s : sl) {
        c = shuffle(c, QChar::single_word(segment_word(s, n), n), graded);
        if (c.term_count() > max_terms) return std::nullopt;
    }
    return c;
}

// c_1 copies of k, c_2 copies of k+1, ... where (c_1 >= c_2 >= ...) is the
// conjugate partition.
inline Word distinguished_word(const Partition& mu, int k, int n) {
    Partition conj = mu.conjugate();
    if (!mu.parts.empty() && mu.parts[0] > 0 && k + mu.parts[0] - 1 > n)
        throw std::domain_error("distinguished_word: letters exceed rank");
    Word w;
    for (size_t j = 0; j < conj.parts.size(); ++j)
        for (int c = 0; c < conj.parts[j]; ++c) w.push_back(k + static_cast<int>(j));
    return w;
}

enum class LinkingCase { Disjoint, Nested, Neither };

inline const char* to_string(LinkingCase c) {
    switch (c) {
        case LinkingCase::Disjoint: return "Disjoint";
        case LinkingCase::Nested: return "Nested";
        default: return "Neither";
    }
}

// In the first two cases the two-segment inductions agree at q = 1, which is
// asserted here because it is cheap and load-bearing downstream.
inline LinkingCase linking_case(const Segment& s1, const Segment& s2, int n) {
    validate_segment(s1, n);
    validate_segment(s2, n);
    LinkingCase c = LinkingCase::Neither;
    if (s1.start + s1.len - 1 < s2.start) c = LinkingCase::Disjoint;
    else if (s2.start >= s1.start && s1.start + s1.len >= s2.start + s2.len)
        c = LinkingCase::Nested;
    if (c != LinkingCase::Neither) {
        QChar a = induced_char({s1, s2}, n).at_one();
        QChar b = induced_char({s2, s1}, n).at_one();
        if (!(a == b))
            throw std::logic_error("linking_case: two-segment characters fail to commute");
    }
    return c;
}

// ------------------------------------------------------------------
// exact coefficient evaluation without materializing the product
// ------------------------------------------------------------------

namespace detail {

// Interleaving-count DP over consumption states of a segment list.  A state
// records how many letters of each segment have been emitted; the mixed-radix
// index space has prod(len_j + 1) states.
struct SegmentDP {
    std::vector<Word> words;
    std::vector<size_t> stride;
    size_t states = 1;

    SegmentDP(const SegmentList& sl, int n) {
        words.reserve(sl.size());
        for (const Segment& s : sl) words.push_back(segment_word(s, n));
        stride.resize(words.size());
        for (size_t j = 0; j < words.size(); ++j) {
            stride[j] = states;
            states *= words[j].size() + 1;
            if (states > (1u << 24))
                throw std::domain_error("SegmentDP: state space too large");
        }
    }

    size_t full_state() const {
        size_t s = 0;
        for (size_t j = 0; j < words.size(); ++j) s += stride[j] * words[j].size();
        return s;
    }

    size_t letters() const {
        size_t l = 0;
        for (const Word& w : words) l += w.size();
        return l;
    }

    // advance every state by one emitted letter
    void apply_letter(const std::vector<long long>& cur, int letter,
                      std::vector<long long>& next) const {
        next.assign(states, 0);
        for (size_t s = 0; s < cur.size(); ++s) {
            if (cur[s] == 0) continue;
            for (size_t j = 0; j < words.size(); ++j) {
                size_t k = (s / stride[j]) % (words[j].size() + 1);
                if (k < words[j].size() && words[j][k] == letter) next[s + stride[j]] += cur[s];
            }
        }
    }

    // F[t][s] = number of interleavings emitting w[0..t) and reaching s
    std::vector<std::vector<long long>> forward(const Word& w) const {
        std::vector<std::vector<long long>> f(w.size() + 1);
        f[0].assign(states, 0);
        f[0][0] = 1;
        for (size_t t = 0; t < w.size(); ++t) apply_letter(f[t], w[t], f[t + 1]);
        return f;
    }

    // B[t][s] = number of interleavings emitting w[t..L) starting from s
    std::vector<std::vector<long long>> backward(const Word& w) const {
        std::vector<std::vector<long long>> b(w.size() + 1);
        b[w.size()].assign(states, 0);
        b[w.size()][full_state()] = 1;
        for (size_t t = w.size(); t-- > 0;) {
            b[t].assign(states, 0);
            for (size_t s = 0; s < states; ++s) {
                long long acc = 0;
                for (size_t j = 0; j < words.size(); ++j) {
                    size_t k = (s / stride[j]) % (words[j].size() + 1);
                    if (k < words[j].size() && words[j][k] == w[t]) acc += b[t + 1][s + stride[j]];
                }
                b[t][s] = acc;
            }
        }
        return b;
    }

    long long coefficient(const Word& w) const {
        if (w.size() != letters()) return 0;
        std::vector<long long> cur(states, 0), next;
        cur[0] = 1;
        for (int letter : w) {
            apply_letter(cur, letter, next);
            cur.swap(next);
        }
        return cur[full_state()];
    }

    // can some interleaving end with k copies of the letter?
    bool trailing_feasible(int letter, int k) const {
        std::vector<char> cur(states, 0);
        cur[full_state()] = 1;
        for (int step = 0; step < k; ++step) {
            std::vector<char> prev(states, 0);
            bool any = false;
            for (size_t s = 0; s < states; ++s) {
                if (!cur[s]) continue;
                for (size_t j = 0; j < words.size(); ++j) {
                    size_t kk = (s / stride[j]) % (words[j].size() + 1);
                    if (kk > 0 && words[j][kk - 1] == letter) {
                        prev[s - stride[j]] = 1;
                        any = true;
                    }
                }
            }
            if (!any) return false;
            cur.swap(prev);
        }
        return true;
    }

    // a uniformly-built (not uniformly-distributed) word of the support
    Word sample_word(std::mt19937_64& rng) const {
        std::vector<size_t> consumed(words.size(), 0);
        Word w;
        w.reserve(letters());
        while (w.size() < letters()) {
            std::vector<size_t> open;
            for (size_t j = 0; j < words.size(); ++j)
                if (consumed[j] < words[j].size()) open.push_back(j);
            size_t j = open[rng() % open.size()];
            w.push_back(words[j][consumed[j]++]);
        }
        return w;
    }
};

// Serre identities checked exactly at sampled support words, with all swap
// and triple contexts of each sample evaluated through the DP tables.
inline std::optional<std::string> sampled_serre_violation(const SegmentList& sl, int n,
                                                          int samples, std::mt19937_64& rng) {
    SegmentDP dp(sl, n);
    std::vector<long long> buf1, buf2, buf3;
    for (int it = 0; it < samples; ++it) {
        Word w = dp.sample_word(rng);
        auto f = dp.forward(w);
        auto b = dp.backward(w);
        long long cw = f[w.size()][dp.full_state()];
        if (cw <= 0) return "sampled word has nonpositive coefficient";
        auto window = [&](size_t t, const std::vector<int>& letters) {
            buf1 = f[t];
            for (size_t q = 0; q < letters.size(); ++q) {
                dp.apply_letter(buf1, letters[q], buf2);
                buf1.swap(buf2);
            }
            const auto& back = b[t + letters.size()];
            long long acc = 0;
            for (size_t s = 0; s < dp.states; ++s) acc += buf1[s] * back[s];
            return acc;
        };
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            int x = w[t], y = w[t + 1];
            int d = x > y ? x - y : y - x;
            if (d > 1 && window(t, {y, x}) != window(t, {x, y}))
                return "commuting swap mismatch near position " + std::to_string(t);
        }
        for (size_t t = 0; t + 2 < w.size(); ++t) {
            int x = w[t], y = w[t + 1], z = w[t + 2];
            int i, j;
            if (x == y && (z == x + 1 || z == x - 1)) i = x, j = z;
            else if (x == z && (y == x + 1 || y == x - 1)) i = x, j = y;
            else if (y == z && (x == y + 1 || x == y - 1)) i = y, j = x;
            else continue;
            long long iji = window(t, {i, j, i});
            long long jii = window(t, {j, i, i});
            long long iij = window(t, {i, i, j});
            if (2 * iji != jii + iij)
                return "Serre triple mismatch near position " + std::to_string(t);
        }
    }
    return std::nullopt;
}

// q = 1 equality of two induced characters checked on sampled words of both
// supports.
inline bool sampled_char_equal_q1(const SegmentList& a, const SegmentList& b, int n, int samples,
                                  std::mt19937_64& rng) {
    SegmentDP da(a, n), db(b, n);
    if (da.letters() != db.letters()) return false;
    for (int it = 0; it < samples; ++it) {
        Word w = (it % 2 == 0) ? da.sample_word(rng) : db.sample_word(rng);
        if (da.coefficient(w) != db.coefficient(w)) return false;
    }
    return true;
}

}  // namespace detail

inline long long word_coefficient_q1(const SegmentList& sl, const Word& w, int n) {
    return detail::SegmentDP(sl, n).coefficient(w);
}

// The distinguished word must appear with multiplicity equal to the product
// of factorials of the conjugate parts.
inline bool multiplicity_certificate(const Partition& mu, int k, int n) {
    SegmentList sl = s_mu(mu, k, n);
    Word w = distinguished_word(mu, k, n);
    long long c = word_coefficient_q1(sl, w, n);
    return c >= 0 && static_cast<uint64_t>(c) == transpose_factorial(mu);
}

// Number of segments whose last letter is the given one; for a segment
// shuffle this equals the longest trailing run of that letter over the
// support (a segment contributes at most one trailing letter, namely its
// last).
inline int count_segments_ending_at(const SegmentList& sl, int letter) {
    int c = 0;
    for (const Segment& s : sl)
        if (s.len > 0 && s.start + s.len - 1 == letter) ++c;
    return c;
}

// ------------------------------------------------------------------
// minimal-letter decomposition and the reordered presentations
// ------------------------------------------------------------------

struct MuMinDecomposition {
    std::vector<Partition> mubar;  // per row, the parts left behind
    Partition mu_min;              // attaining parts, weakly decreasing
    int letter = 0;                // i_T
};

inline MuMinDecomposition mu_min_decompose(const Tableau& t, int n) {
    DescentData desc = i_T_epsilon_Tplus(t, n);
    std::vector<Partition> mus = psi_lambda(t, n);
    MuMinDecomposition r;
    r.letter = desc.letter;
    std::vector<int> min_parts;
    for (size_t i = 0; i < mus.size(); ++i) {
        std::vector<int> rest;
        for (int p : mus[i].parts) {
            if (p > 0 && p + static_cast<int>(i) == desc.letter) {
                min_parts.push_back(p);
            } else {
                if (p > 0 && p + static_cast<int>(i) < desc.letter)
                    throw std::logic_error("mu_min_decompose: minimality violated");
                rest.push_back(p);
            }
        }
        r.mubar.push_back(Partition(std::move(rest)));
    }
    std::sort(min_parts.begin(), min_parts.end(), std::greater<int>());
    r.mu_min = Partition(std::move(min_parts));
    if (r.mu_min.parts.empty()) throw std::logic_error("mu_min_decompose: empty minimal set");
    return r;
}

// Reversed row blocks followed by the right-justified minimal block.
inline SegmentList rearranged_segments(const Tableau& t, int n) {
    MuMinDecomposition d = mu_min_decompose(t, n);
    SegmentList sl;
    for (size_t i = d.mubar.size(); i-- > 0;) {
        SegmentList block = s_mu_tilde(d.mubar[i], static_cast<int>(i) + 1, n);
        sl.insert(sl.end(), block.begin(), block.end());
    }
    SegmentList tail = s_hat_mu_tilde(d.mu_min, d.letter, n);
    sl.insert(sl.end(), tail.begin(), tail.end());
    return sl;
}

// Same, with every minimal part lowered by one and the block letter dropped.
inline SegmentList rearranged_segments_plus(const Tableau& t, int n) {
    MuMinDecomposition d = mu_min_decompose(t, n);
    SegmentList sl;
    for (size_t i = d.mubar.size(); i-- > 0;) {
        SegmentList block = s_mu_tilde(d.mubar[i], static_cast<int>(i) + 1, n);
        sl.insert(sl.end(), block.begin(), block.end());
    }
    Partition lowered = d.mu_min.lowered();
    if (!lowered.parts.empty()) {
        SegmentList tail = s_hat_mu_tilde(lowered, d.letter - 1, n);
        sl.insert(sl.end(), tail.begin(), tail.end());
    }
    return sl;
}

// ------------------------------------------------------------------
// the certificate sweep
// ------------------------------------------------------------------

struct VerifyOptions {
    size_t materialize_max_letters = 12;
    size_t materialize_max_terms = 300000;
    int samples = 8;           // sampled words per oversized tableau
    unsigned seed = 0x5eed;
    int threads = 0;           // 0 = KLR_THREADS env or hardware
};

struct VerifyFailure {
    std::string check;
    std::string witness;
    std::string detail;

    bool operator<(const VerifyFailure& o) const {
        return std::tie(witness, check, detail) < std::tie(o.witness, o.check, o.detail);
    }
};

struct PhiReport {
    Partition lambda;
    int n = 0;
    size_t tableaux = 0;
    size_t full_characters = 0;
    size_t sampled_characters = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("KLR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
    threads = std::min<int>(threads, static_cast<int>(count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

// Runs, for every tableau of the crystal of lambda:
//  (a) the Serre test on the induced character,
//  (b) the three routes to epsilon at the minimal letter,
//  (c) the multiset identity between the raised tableau's segments and the
//      lowered minimal block,
//  (d) the weight bookkeeping between segments and crystal weight,
// plus the reordering identity between the two presentations of the induced
// character.  Characters beyond the materialization budget are checked by
// exact coefficient evaluation at sampled support words.
inline PhiReport verify_phi_lambda(const Partition& lambda, int n, VerifyOptions opts = {}) {
    PhiReport report;
    report.lambda = lambda.trimmed();
    report.n = n;
    Tableau hw = Tableau::highest_weight(report.lambda);
    if (report.lambda.length() > n)
        throw std::domain_error("verify_phi_lambda: shape has more rows than the rank allows");
    CrystalGraph g = generate_crystal(hw, n);
    report.tableaux = g.size();
    Weight lambda_weight = tableau_weight(hw, n);

    std::vector<std::vector<VerifyFailure>> failures(g.size());
    std::atomic<size_t> full_count{0}, sampled_count{0};

    detail::parallel_for(g.size(), detail::resolve_threads(opts.threads), [&](size_t vi) {
        const Tableau& t = g.vertices[vi];
        std::string witness = t.to_string();
        auto fail = [&](const char* check, std::string detail_msg) {
            failures[vi].push_back({check, witness, std::move(detail_msg)});
        };
        SegmentList sl = s_T(t, n);

        // (d) weight bookkeeping
        Weight from_segments = weight_from_root(segment_list_root(sl, n));
        Weight drop = lambda_weight - g.weights[vi];
        if (!(from_segments == drop)) fail("weight", "segment weight mismatch");

        std::optional<QChar> full;
        if (segment_list_letters(sl) <= opts.materialize_max_letters)
            full = induced_char_bounded(sl, n, false, opts.materialize_max_terms);
        if (full) full_count.fetch_add(1);
        else sampled_count.fetch_add(1);

        std::mt19937_64 rng(opts.seed + 0x9e3779b9u * static_cast<unsigned>(vi));

        // (a) Serre relations
        if (full) {
            SerreReport sr = serre_check(*full);
            if (!sr.passed) fail("serre", sr.counterexample);
        } else {
            auto violation = detail::sampled_serre_violation(sl, n, opts.samples, rng);
            if (violation) fail("serre", *violation);
        }

        if (!(t == hw)) {
            DescentData desc = i_T_epsilon_Tplus(t, n);

            // (b) epsilon at the minimal letter, three routes
            int eps_lemma = desc.multiplicity;
            int eps_crystal = 0;
            std::optional<Tableau> cur = t;
            while ((cur = tableau_e(*cur, desc.letter, n))) ++eps_crystal;
            if (eps_crystal != eps_lemma) fail("epsilon", "crystal route disagrees");
            if (full) {
                if (epsilon_i(*full, desc.letter) != eps_lemma)
                    fail("epsilon", "character route disagrees");
            } else {
                detail::SegmentDP dp(sl, n);
                if (!dp.trailing_feasible(desc.letter, eps_lemma) ||
                    dp.trailing_feasible(desc.letter, eps_lemma + 1))
                    fail("epsilon", "character route (DP) disagrees");
            }

            // (c) segments of the raised tableau
            MuMinDecomposition d = mu_min_decompose(t, n);
            SegmentList lhs = s_T(desc.raised, n);
            SegmentList rhs;
            for (size_t i = 0; i < d.mubar.size(); ++i) {
                SegmentList block = s_mu(d.mubar[i], static_cast<int>(i) + 1, n);
                rhs.insert(rhs.end(), block.begin(), block.end());
            }
            Partition lowered = d.mu_min.lowered();
            if (!lowered.parts.empty()) {
                SegmentList block = s_hat_mu(lowered, d.letter - 1, n);
                rhs.insert(rhs.end(), block.begin(), block.end());
            }
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs != rhs) fail("raised-segments", "multiset mismatch");

            // reordering identity between the two presentations
            SegmentList rs = rearranged_segments(t, n);
            if (full) {
                auto rs_char = induced_char_bounded(rs, n, false, opts.materialize_max_terms);
                if (!rs_char || !(full->at_one() == rs_char->at_one()))
                    fail("reorder", "rearranged character differs at q=1");
            } else {
                if (!detail::sampled_char_equal_q1(sl, rs, n, opts.samples, rng))
                    fail("reorder", "sampled coefficients differ");
            }
        }
    });

    for (auto& fs : failures)
        for (auto& f : fs) report.failures.push_back(std::move(f));
    std::sort(report.failures.begin(), report.failures.end());
    report.full_characters = full_count.load();
    report.sampled_characters = sampled_count.load();
    return report;
}

}  // namespace klrtab
