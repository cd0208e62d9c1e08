#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "subalg/polynomial.hpp"

namespace subalg {

/// Monomial subalgebra K[x^a1, ..., x^as], presented by exponent vectors.
/// Zero vectors are permitted (they generate constants).
struct MonomialAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<long long>> generators;

    static MonomialAlgebra make(std::size_t dim, std::vector<std::vector<long long>> gens) {
        MonomialAlgebra a;
        a.dim = dim;
        for (const auto& g : gens) {
            if (g.size() != dim)
                throw std::invalid_argument("monomial algebra: exponent dimension mismatch");
            for (long long e : g)
                if (e < 0) throw std::invalid_argument("monomial algebra: negative exponent");
        }
        a.generators = std::move(gens);
        return a;
    }
};

namespace detail {

struct VecHash {
    std::size_t operator()(const std::vector<long long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

/// Search for c in N^s with sum_i c_i * a_i = beta. Depth-first over the
/// generator index with coordinate-wise residual pruning; multiplicities are
/// bounded by max_i beta_i, which suffices for completeness. Tries small
/// multiplicities first, so the witness is the lexicographically smallest
/// solution in c.
inline std::optional<std::vector<long long>> monomial_membership(
    const MonomialAlgebra& a, std::span<const long long> beta) {
    if (beta.size() != a.dim)
        throw std::invalid_argument("monomial_membership: dimension mismatch");
    for (long long b : beta)
        if (b < 0) throw std::invalid_argument("monomial_membership: negative exponent");
    long long box = 0;
    for (long long b : beta) box = std::max(box, b);
    std::vector<long long> residual(beta.begin(), beta.end());
    std::vector<long long> choice(a.generators.size(), 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == a.generators.size())
            return std::all_of(residual.begin(), residual.end(), [](long long r) { return r == 0; });
        const auto& gen = a.generators[i];
        bool zero_gen = std::all_of(gen.begin(), gen.end(), [](long long e) { return e == 0; });
        long long max_c = zero_gen ? 0 : box;
        for (long long c = 0; c <= max_c; ++c) {
            if (c > 0) {
                bool fits = true;
                for (std::size_t k = 0; k < a.dim && fits; ++k) fits = gen[k] <= residual[k];
                if (!fits) break;
                for (std::size_t k = 0; k < a.dim; ++k) residual[k] -= gen[k];
            }
            choice[i] = c;
            if (dfs(i + 1)) return true;
        }
        // undo whatever was subtracted for this index
        for (std::size_t k = 0; k < a.dim; ++k) residual[k] += gen[k] * choice[i];
        choice[i] = 0;
        return false;
    };
    if (dfs(0)) return choice;
    return std::nullopt;
}

inline std::optional<std::vector<long long>> monomial_membership(
    const MonomialAlgebra& a, const std::vector<long long>& beta) {
    return monomial_membership(a, std::span<const long long>(beta));
}

/// Memoized variant over the set of residual vectors reachable from beta.
/// Intended for unary-scale inputs; agrees with the search solver on
/// feasibility.
inline std::optional<std::vector<long long>> monomial_membership_dp(
    const MonomialAlgebra& a, std::span<const long long> beta) {
    if (beta.size() != a.dim)
        throw std::invalid_argument("monomial_membership_dp: dimension mismatch");
    std::unordered_map<std::vector<long long>, bool, detail::VecHash> memo;
    std::function<bool(const std::vector<long long>&)> feasible =
        [&](const std::vector<long long>& r) -> bool {
        if (std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; })) return true;
        auto it = memo.find(r);
        if (it != memo.end()) return it->second;
        memo.emplace(r, false);  // guards zero generators from recursing in place
        bool ok = false;
        for (const auto& gen : a.generators) {
            bool nonzero = false, fits = true;
            for (std::size_t k = 0; k < a.dim && fits; ++k) {
                nonzero = nonzero || gen[k] > 0;
                fits = gen[k] <= r[k];
            }
            if (!fits || !nonzero) continue;
            std::vector<long long> next(r);
            for (std::size_t k = 0; k < a.dim; ++k) next[k] -= gen[k];
            if (feasible(next)) {
                ok = true;
                break;
            }
        }
        memo[r] = ok;
        return ok;
    };
    std::vector<long long> r(beta.begin(), beta.end());
    std::vector<long long> witness(a.generators.size(), 0);
    if (!feasible(r)) return std::nullopt;
    // peel off one generator at a time along the memoized feasible region
    while (!std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; })) {
        bool advanced = false;
        for (std::size_t i = 0; i < a.generators.size() && !advanced; ++i) {
            const auto& gen = a.generators[i];
            bool nonzero = false, fits = true;
            for (std::size_t k = 0; k < a.dim && fits; ++k) {
                nonzero = nonzero || gen[k] > 0;
                fits = gen[k] <= r[k];
            }
            if (!fits || !nonzero) continue;
            std::vector<long long> next(r);
            for (std::size_t k = 0; k < a.dim; ++k) next[k] -= gen[k];
            if (feasible(next)) {
                ++witness[i];
                r = std::move(next);
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("monomial_membership_dp: witness reconstruction failed");
    }
    return witness;
}

/// A polynomial lies in a monomial algebra iff every monomial of its support
/// does; the breakdown records the per-monomial answers.
template <class F>
struct MonomialBreakdown {
    bool member = true;
    std::vector<std::pair<Monomial, bool>> per_monomial;
};

template <class F>
MonomialBreakdown<F> poly_in_monomial_algebra(const MonomialAlgebra& a, const Polynomial<F>& f) {
    if (!f.is_zero() && f.context()->size() != a.dim)
        throw std::invalid_argument("poly_in_monomial_algebra: dimension mismatch");
    MonomialBreakdown<F> out;
    for (const auto& t : f.terms()) {
        bool ok = monomial_membership(a, t.mono.exponents()).has_value();
        out.member = out.member && ok;
        out.per_monomial.emplace_back(t.mono, ok);
    }
    return out;
}

/// Sets S_1,...,S_n of at most three positive integers each; the question is
/// whether some T meets every S_i in exactly one element.
struct SatInstance {
    std::vector<std::vector<int>> sets;

    static SatInstance make(std::vector<std::vector<int>> sets) {
        for (auto& s : sets) {
            if (s.size() > 3) throw std::invalid_argument("1in3sat: sets have at most 3 elements");
            for (int v : s)
                if (v <= 0) throw std::invalid_argument("1in3sat: elements must be positive");
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        return SatInstance{std::move(sets)};
    }

    /// Exhaustive check, used as the oracle side of the encoder round-trip.
    bool satisfiable_brute_force() const {
        int max_elem = 0;
        for (const auto& s : sets)
            for (int v : s) max_elem = std::max(max_elem, v);
        for (std::uint64_t mask = 0; mask < (1ull << max_elem); ++mask) {
            bool ok = true;
            for (const auto& s : sets) {
                int hits = 0;
                for (int v : s)
                    if (mask & (1ull << (v - 1))) ++hits;
                if (hits != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }
};

struct SatEncoding {
    MonomialAlgebra algebra;          // square-free generators alpha_1..alpha_s
    std::vector<long long> target;    // beta = (1,...,1)
};

/// Encode 1in3Sat as monomial-algebra membership: one coordinate per set,
/// one generator per ground element i with (alpha_i)_j = 1 iff i lies in
/// S_j, target beta = (1,...,1). Feasibility is preserved in both
/// directions.
inline SatEncoding encode_1in3sat(const SatInstance& inst) {
    int max_elem = 0;
    for (const auto& s : inst.sets)
        for (int v : s) max_elem = std::max(max_elem, v);
    std::size_t n = inst.sets.size();
    std::vector<std::vector<long long>> gens;
    for (int i = 1; i <= max_elem; ++i) {
        std::vector<long long> alpha(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& s = inst.sets[j];
            if (std::find(s.begin(), s.end(), i) != s.end()) alpha[j] = 1;
        }
        gens.push_back(std::move(alpha));
    }
    return SatEncoding{MonomialAlgebra::make(n, std::move(gens)),
                       std::vector<long long>(n, 1)};
}

/// Witness for sum c_i * a_i = b, or absence. Dynamic program over the
/// residues 0..b; the one-dimensional case of monomial membership.
inline std::optional<std::vector<long long>> unbounded_subset_sum(
    std::span<const unsigned long long> a, unsigned long long b) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> used(b + 1, npos);
    std::vector<char> reachable(b + 1, 0);
    reachable[0] = 1;
    for (unsigned long long v = 1; v <= b; ++v) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0 || a[i] > v) continue;
            if (reachable[v - a[i]]) {
                reachable[v] = 1;
                used[v] = i;
                break;
            }
        }
    }
    if (!reachable[b]) return std::nullopt;
    std::vector<long long> c(a.size(), 0);
    for (unsigned long long v = b; v > 0; v -= a[used[v]]) ++c[used[v]];
    return c;
}

}  // namespace subalg
