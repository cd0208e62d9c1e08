#pragma once

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subalg/polynomial.hpp"

namespace subalg {

/// Commutative-semigroup replacement rules (x^a_i, x^b_i): two monomials are
/// congruent when one can be rewritten into the other by replacing a divisor
/// x^a by the paired x^b (in either direction) finitely often.
struct CsgSystem {
    ContextPtr ctx;
    std::vector<std::pair<Monomial, Monomial>> rules;

    static CsgSystem make(ContextPtr ctx, std::vector<std::pair<Monomial, Monomial>> rules) {
        CsgSystem c;
        c.ctx = std::move(ctx);
        for (const auto& [l, r] : rules) {
            if (l.width() != c.ctx->size() || r.width() != c.ctx->size())
                throw std::invalid_argument("csg: rule monomial does not fit the context");
        }
        c.rules = std::move(rules);
        return c;
    }
};

struct CsgSearchResult {
    bool reached = false;
    std::vector<Monomial> path;  // start..goal when reached; path.size()-1 steps
    std::size_t visited = 0;
    bool capped = false;  // some state was pruned by step_cap or visit_cap
};

/// Breadth-first search over the rewriting graph from m towards goal.
/// step_cap bounds the path length (BFS depth), visit_cap bounds memory.
/// A negative answer with `capped` set means "not reached within the caps";
/// with `capped` clear the reachable component was exhausted. A returned
/// path length equals the minimal number of replacement steps.
inline CsgSearchResult csg_decide_bfs(const CsgSystem& c, const Monomial& m, const Monomial& goal,
                                      std::size_t step_cap, std::size_t visit_cap = 100000) {
    if (step_cap == 0) throw std::invalid_argument("csg_decide_bfs: step cap must be positive");
    if (m.width() != c.ctx->size() || goal.width() != c.ctx->size())
        throw std::invalid_argument("csg_decide_bfs: monomial does not fit the context");
    struct Info {
        std::size_t depth;
        Monomial parent;
        bool has_parent;
    };
    std::unordered_map<Monomial, Info, MonomialHash> seen;
    seen.emplace(m, Info{0, m, false});
    std::deque<Monomial> queue{m};
    CsgSearchResult res;
    auto build_path = [&](const Monomial& end) {
        std::vector<Monomial> path{end};
        Monomial cur = end;
        while (seen.at(cur).has_parent) {
            cur = seen.at(cur).parent;
            path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!queue.empty()) {
        Monomial cur = queue.front();
        queue.pop_front();
        std::size_t depth = seen.at(cur).depth;
        if (cur == goal) {
            res.reached = true;
            res.path = build_path(cur);
            res.visited = seen.size();
            return res;
        }
        if (depth == step_cap) {
            res.capped = true;
            continue;
        }
        for (const auto& [a, b] : c.rules) {
            for (const auto* dir : {&a, &b}) {
                const Monomial& from = *dir;
                const Monomial& to = dir == &a ? b : a;
                if (!from.divides(cur)) continue;
                Monomial next = cur.quotient_by(from) * to;
                if (seen.count(next)) continue;
                if (seen.size() >= visit_cap) {
                    res.capped = true;
                    continue;
                }
                seen.emplace(next, Info{depth + 1, cur, true});
                queue.push_back(next);
            }
        }
    }
    res.visited = seen.size();
    return res;
}

/// The rewriting problem as binomial ideal membership:
/// (R, m, m') -> (x^a_1 - x^b_1, ..., x^a_s - x^b_s ; m - m').
template <class F>
std::pair<std::vector<Polynomial<F>>, Polynomial<F>> csg_to_ideal(const CsgSystem& c,
                                                                  const Monomial& m,
                                                                  const Monomial& goal, F one) {
    std::vector<Polynomial<F>> gens;
    for (const auto& [a, b] : c.rules) {
        gens.push_back(Polynomial<F>::single_term(c.ctx, a, one) -
                       Polynomial<F>::single_term(c.ctx, b, one));
    }
    Polynomial<F> target = Polynomial<F>::single_term(c.ctx, m, one) -
                           Polynomial<F>::single_term(c.ctx, goal, one);
    return {std::move(gens), std::move(target)};
}

}  // namespace subalg
