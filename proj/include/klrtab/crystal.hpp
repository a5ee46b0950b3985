#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/tableaux.hpp"

// Crystal structure: the rank-one box crystal, the signature rule on tensor
// words, tableau operators through the reading words, breadth-first
// generation of a full crystal graph, and isomorphism testing.

namespace klrtab {

// Raising/lowering data of a single box b in 1..n+1 for the letter i.
struct BoxOps {
    int raised = 0;   // e_i(b), 0 if undefined
    int lowered = 0;  // f_i(b), 0 if undefined
    int eps = 0;
    int phi = 0;
};

inline BoxOps box_ops(int b, int i, int n) {
    if (i < 1 || i > n) throw std::domain_error("box_ops: letter out of range");
    if (b < 1 || b > n + 1) throw std::domain_error("box_ops: entry out of range");
    BoxOps r;
    if (b == i + 1) r.raised = i, r.eps = 1;
    if (b == i) r.lowered = i + 1, r.phi = 1;
    return r;
}

namespace detail {

// Bracketing of the i-signature of a box word: '+' for entry i, '-' for
// entry i+1, a '+' cancels a '-' to its right.  Survivors keep word order,
// so all surviving '-' precede all surviving '+'.
struct SignatureResult {
    std::vector<size_t> minus;  // positions of surviving '-', ascending
    std::vector<size_t> plus;   // positions of surviving '+', ascending
};

inline SignatureResult bracket_signature(const Word& w, int i) {
    SignatureResult r;
    std::vector<size_t> stack;
    for (size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i) {
            stack.push_back(p);
        } else if (w[p] == i + 1) {
            if (!stack.empty())
                stack.pop_back();
            else
                r.minus.push_back(p);
        }
    }
    r.plus = std::move(stack);
    return r;
}

}  // namespace detail

inline int word_eps(const Word& w, int i) {
    return static_cast<int>(detail::bracket_signature(w, i).minus.size());
}

inline int word_phi(const Word& w, int i) {
    return static_cast<int>(detail::bracket_signature(w, i).plus.size());
}

// Raising operator on a tensor word: act at the rightmost surviving '-'.
inline std::optional<Word> tensor_e(const Word& w, int i) {
    auto sig = detail::bracket_signature(w, i);
    if (sig.minus.empty()) return std::nullopt;
    Word r = w;
    r[sig.minus.back()] = i;
    return r;
}

// Lowering operator on a tensor word: act at the leftmost surviving '+'.
inline std::optional<Word> tensor_f(const Word& w, int i) {
    auto sig = detail::bracket_signature(w, i);
    if (sig.plus.empty()) return std::nullopt;
    Word r = w;
    r[sig.plus.front()] = i + 1;
    return r;
}

namespace detail {

inline std::optional<Tableau> tableau_apply(const Tableau& t, int i, int n, bool lower,
                                            Reading rd) {
    std::vector<ReadPos> pos;
    Word w = reading(t, rd, &pos);
    auto sig = bracket_signature(w, i);
    size_t target;
    int replacement;
    if (lower) {
        if (sig.plus.empty()) return std::nullopt;
        target = sig.plus.front();
        replacement = i + 1;
    } else {
        if (sig.minus.empty()) return std::nullopt;
        target = sig.minus.back();
        replacement = i;
    }
    Tableau r = t;
    r.rows[static_cast<size_t>(pos[target].row - 1)][static_cast<size_t>(pos[target].col - 1)] =
        replacement;
    if (!validate_ssyt(r, n))
        throw std::logic_error("tableau operator produced a non-semistandard tableau");
    return r;
}

}  // namespace detail

inline std::optional<Tableau> tableau_e(const Tableau& t, int i, int n,
                                        Reading rd = Reading::MiddleEastern) {
    return detail::tableau_apply(t, i, n, /*lower=*/false, rd);
}

inline std::optional<Tableau> tableau_f(const Tableau& t, int i, int n,
                                        Reading rd = Reading::MiddleEastern) {
    return detail::tableau_apply(t, i, n, /*lower=*/true, rd);
}

inline int tableau_eps(const Tableau& t, int i, Reading rd = Reading::MiddleEastern) {
    return word_eps(reading(t, rd), i);
}

inline int tableau_phi(const Tableau& t, int i, Reading rd = Reading::MiddleEastern) {
    return word_phi(reading(t, rd), i);
}

struct CrystalEdge {
    int source;
    int letter;
    int target;

    bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    int n = 0;
    std::vector<Tableau> vertices;  // discovery order, source first
    std::vector<Weight> weights;
    std::vector<CrystalEdge> edges;
    int source = 0;

    // out[v][i-1] = target of the i-arrow from v, or -1
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    size_t size() const { return vertices.size(); }
};

// Closure of the highest-weight tableau under the lowering operators.
// Deterministic: FIFO discovery order, letters ascending.
inline CrystalGraph generate_crystal(const Tableau& hw, int n,
                                     Reading rd = Reading::MiddleEastern) {
    require_ssyt(hw, n, "generate_crystal");
    CrystalGraph g;
    g.n = n;
    std::unordered_map<std::string, int> index;
    auto add_vertex = [&](const Tableau& t) {
        int id = static_cast<int>(g.vertices.size());
        index.emplace(t.to_string(), id);
        g.vertices.push_back(t);
        g.weights.push_back(tableau_weight(t, n));
        g.out.emplace_back(static_cast<size_t>(n), -1);
        g.in.emplace_back(static_cast<size_t>(n), -1);
        return id;
    };
    add_vertex(hw);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            auto next = tableau_f(g.vertices[static_cast<size_t>(v)], i, n, rd);
            if (!next) continue;
            auto it = index.find(next->to_string());
            int u;
            if (it == index.end()) {
                u = add_vertex(*next);
                queue.push_back(u);
            } else {
                u = it->second;
            }
            g.out[static_cast<size_t>(v)][static_cast<size_t>(i - 1)] = u;
            g.in[static_cast<size_t>(u)][static_cast<size_t>(i - 1)] = v;
            g.edges.push_back({v, i, u});
        }
    }
    return g;
}

// A connected crystal with a unique source admits at most one label
// preserving isomorphism matching the sources; chase it by parallel BFS.
inline bool crystal_isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.n != b.n || a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    std::vector<int> map_ab(a.size(), -1), map_ba(b.size(), -1);
    std::deque<std::pair<int, int>> queue;
    auto match = [&](int va, int vb) {
        if (map_ab[static_cast<size_t>(va)] == -1 && map_ba[static_cast<size_t>(vb)] == -1) {
            if (!(a.weights[static_cast<size_t>(va)] == b.weights[static_cast<size_t>(vb)]))
                return false;
            map_ab[static_cast<size_t>(va)] = vb;
            map_ba[static_cast<size_t>(vb)] = va;
            queue.emplace_back(va, vb);
            return true;
        }
        return map_ab[static_cast<size_t>(va)] == vb && map_ba[static_cast<size_t>(vb)] == va;
    };
    if (!match(a.source, b.source)) return false;
    while (!queue.empty()) {
        auto [va, vb] = queue.front();
        queue.pop_front();
        for (int i = 0; i < a.n; ++i) {
            int ua = a.out[static_cast<size_t>(va)][static_cast<size_t>(i)];
            int ub = b.out[static_cast<size_t>(vb)][static_cast<size_t>(i)];
            if ((ua == -1) != (ub == -1)) return false;
            if (ua != -1 && !match(ua, ub)) return false;
        }
    }
    for (int m : map_ab)
        if (m == -1) return false;
    return true;
}

}  // namespace klrtab
