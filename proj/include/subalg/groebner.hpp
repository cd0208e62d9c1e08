#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subalg/polynomial.hpp"

namespace subalg {

/// f = sum quotients[i] * divisors[i] + remainder, exactly; no monomial of
/// the remainder is divisible by any divisor's initial monomial.
template <class F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients;
    Polynomial<F> remainder;
};

/// Multivariate division with remainder. Divisors are tried in list order at
/// every reduction step, which makes the result deterministic for a fixed
/// list.
template <class F>
DivisionResult<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors,
                         const MonomialOrder& ord) {
    struct Lead {
        Monomial mono;
        F coeff;
    };
    std::vector<Lead> leads;
    leads.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
        require_same_context(f.context(), d.context(), "divide");
        auto lt = d.initial_term(ord);
        leads.push_back({lt.mono, lt.coeff});
    }
    DivisionResult<F> res{std::vector<Polynomial<F>>(divisors.size(), Polynomial<F>(f.context())),
                          Polynomial<F>(f.context())};
    Polynomial<F> h = f;
    while (!h.is_zero()) {
        auto lt = h.initial_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].mono.divides(lt.mono)) continue;
            Monomial q = lt.mono.quotient_by(leads[i].mono);
            F c = lt.coeff / leads[i].coeff;
            res.quotients[i] += Polynomial<F>::single_term(f.context(), q, c);
            h -= divisors[i].times_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            auto t = Polynomial<F>::single_term(f.context(), lt.mono, lt.coeff);
            res.remainder += t;
            h -= t;
        }
    }
    return res;
}

template <class F>
DivisionResult<F> divide(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                         const MonomialOrder& ord) {
    return divide(f, std::span<const Polynomial<F>>(divisors), ord);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    auto lf = f.initial_term(ord);
    auto lg = g.initial_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    return f.times_term(l.quotient_by(lf.mono), lf.coeff.inverse()) -
           g.times_term(l.quotient_by(lg.mono), lg.coeff.inverse());
}

/// A set of monic polynomials with certified Groebner-basis status under a
/// stored order. Elements are kept sorted ascending by initial monomial, so
/// normal forms and serialization are deterministic. A basis may be
/// truncated at a weighted degree cap (only sound for homogeneous input).
template <class F>
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial<F>> elements, MonomialOrder ord, bool reduced,
                  std::optional<long long> cap = std::nullopt,
                  std::vector<long long> weights = {})
        : elems_(std::move(elements)),
          ord_(std::move(ord)),
          reduced_(reduced),
          cap_(cap),
          weights_(std::move(weights)) {
        sort_elements();
    }

    const std::vector<Polynomial<F>>& elements() const { return elems_; }
    const MonomialOrder& order() const { return ord_; }
    bool reduced() const { return reduced_; }
    bool truncated() const { return cap_.has_value(); }
    std::optional<long long> truncation_cap() const { return cap_; }
    const std::vector<long long>& truncation_weights() const { return weights_; }

    /// Max total degree of the elements; -1 for an empty basis.
    long long degree() const {
        long long d = -1;
        for (const auto& g : elems_) d = std::max(d, g.degree());
        return d;
    }

    Polynomial<F> normal_form(const Polynomial<F>& f) const {
        return divide(f, elems_, ord_).remainder;
    }
    bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

private:
    void sort_elements() {
        std::stable_sort(elems_.begin(), elems_.end(), [&](const auto& a, const auto& b) {
            return ord_.less(a.initial_term(ord_).mono, b.initial_term(ord_).mono);
        });
    }

    std::vector<Polynomial<F>> elems_;
    MonomialOrder ord_;
    bool reduced_;
    std::optional<long long> cap_;
    std::vector<long long> weights_;
};

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    return gb.normal_form(f);
}

namespace detail {

struct PairKey {
    long long lcm_degree;
    std::vector<long long> lcm;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (lcm != o.lcm) return lcm < o.lcm;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

/// Buchberger loop shared by the full and the degree-truncated variant.
/// `wdeg` returns the weighted degree of a monomial when a cap is active.
template <class F>
std::vector<Polynomial<F>> buchberger_loop(std::vector<Polynomial<F>> basis,
                                           const MonomialOrder& ord,
                                           std::optional<long long> cap,
                                           std::span<const long long> weights) {
    auto lead = [&](std::size_t i) { return basis[i].initial_term(ord).mono; };
    std::set<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> safe;  // pairs with S-poly known to drop to 0

    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(lead(i), lead(j));
        if (cap && l.weighted_degree(weights) > *cap) return;  // homogeneous: never needed below cap
        pending.insert({l.degree(), l.exponents(), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!pending.empty()) {
        PairKey key = *pending.begin();
        pending.erase(pending.begin());
        std::size_t i = key.i, j = key.j;
        Monomial li = lead(i), lj = lead(j);
        if (Monomial::coprime(li, lj)) {
            safe.insert({i, j});
            continue;
        }
        Monomial l = Monomial::lcm(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lead(k).divides(l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (safe.count({p1.first, p1.second}) && safe.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;  // conservatively not marked safe
        Polynomial<F> rem = divide(s_polynomial(basis[i], basis[j], ord), basis, ord).remainder;
        safe.insert({i, j});
        if (rem.is_zero()) continue;
        basis.push_back(rem.monic(ord));
        std::size_t m = basis.size() - 1;
        for (std::size_t k = 0; k < m; ++k) push_pair(k, m);
    }
    return basis;
}

template <class F>
std::vector<Polynomial<F>> prepare_generators(std::span<const Polynomial<F>> gens,
                                              const MonomialOrder& ord) {
    std::vector<Polynomial<F>> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!basis.empty()) require_same_context(basis.front().context(), g.context(), "buchberger");
        Polynomial<F> m = g.monic(ord);
        if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(std::move(m));
    }
    std::stable_sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
        return ord.less(a.initial_term(ord).mono, b.initial_term(ord).mono);
    });
    return basis;
}

/// Minimalize + tail-reduce to the unique reduced basis (restricted to the
/// cap when one is active; for homogeneous truncated bases this is the
/// reduced basis of the ideal cut at the cap).
template <class F>
std::vector<Polynomial<F>> interreduce(std::vector<Polynomial<F>> basis, const MonomialOrder& ord) {
    // drop elements whose lead is divisible by another element's lead
    std::vector<Polynomial<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial li = basis[i].initial_term(ord).mono;
            const Monomial lj = basis[j].initial_term(ord).mono;
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<F>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial<F> r = divide(minimal[i], others, ord).remainder.monic(ord);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::stable_sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        return ord.less(a.initial_term(ord).mono, b.initial_term(ord).mono);
    });
    return minimal;
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm degree first) and the coprime/chain criteria. Returns a certified,
/// not necessarily reduced basis of <gens>.
template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const MonomialOrder& ord) {
    auto basis = detail::buchberger_loop<F>(detail::prepare_generators(gens, ord), ord,
                                            std::nullopt, {});
    return GroebnerBasis<F>(std::move(basis), ord, /*reduced=*/false);
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord) {
    return buchberger(std::span<const Polynomial<F>>(gens), ord);
}

/// The unique reduced basis: monic elements, no term of any element
/// divisible by another element's initial monomial.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb) {
    auto minimal = detail::interreduce(gb.elements(), gb.order());
    return GroebnerBasis<F>(std::move(minimal), gb.order(), /*reduced=*/true, gb.truncation_cap(),
                            gb.truncation_weights());
}

template <class F>
GroebnerBasis<F> reduced_groebner(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord) {
    return reduce_basis(buchberger(gens, ord));
}

/// Degree-truncated Buchberger for ideals generated by weighted-homogeneous
/// polynomials: S-pairs of weighted degree above the cap are discarded,
/// which for homogeneous input cannot affect any element of degree <= cap.
/// Input that is not homogeneous for the given weights is rejected.
template <class F>
GroebnerBasis<F> truncated_groebner(std::span<const Polynomial<F>> gens, const MonomialOrder& ord,
                                    long long cap, std::vector<long long> weights) {
    for (const auto& g : gens) {
        if (!g.is_weighted_homogeneous(weights))
            throw std::invalid_argument("truncated_groebner: generators must be homogeneous");
    }
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gens)
        if (!g.is_zero() && g.weighted_degree(weights) <= cap) kept.push_back(g);
    auto basis = detail::buchberger_loop<F>(detail::prepare_generators<F>(kept, ord), ord, cap,
                                            weights);
    auto minimal = detail::interreduce(std::move(basis), ord);
    return GroebnerBasis<F>(std::move(minimal), ord, /*reduced=*/true, cap, std::move(weights));
}

template <class F>
GroebnerBasis<F> truncated_groebner(const std::vector<Polynomial<F>>& gens,
                                    const MonomialOrder& ord, long long cap,
                                    std::vector<long long> weights) {
    return truncated_groebner(std::span<const Polynomial<F>>(gens), ord, cap, std::move(weights));
}

}  // namespace subalg
