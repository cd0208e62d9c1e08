#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subalg/algmem.hpp"
#include "subalg/polynomial.hpp"

namespace subalg {

/// Image of the ideal-to-algebra reduction: generators t*f_1,...,t*f_s,
/// x_1,...,x_n over K[t,x] and target t*g.
template <class F>
struct AlgebraInstance {
    ContextPtr ctx;
    std::vector<Polynomial<F>> generators;
    Polynomial<F> target;
    std::string provenance;

    SubalgebraPresentation<F> presentation() const {
        return SubalgebraPresentation<F>::make(ctx, generators);
    }
};

/// (f_1,...,f_s; g) -> (t f_1,...,t f_s, x_1,...,x_n; t g) with a fresh
/// variable t prepended to the context. g lies in the ideal <f_1,...,f_s>
/// exactly when t*g lies in the subalgebra generated by the image.
template <class F>
AlgebraInstance<F> ideal_to_algebra(const std::vector<Polynomial<F>>& f_list,
                                    const Polynomial<F>& g) {
    const ContextPtr& xctx = g.context();
    for (const auto& f : f_list) require_same_context(xctx, f.context(), "ideal_to_algebra");
    std::string tname = "t";
    while (xctx->has(tname)) tname += "_";
    std::vector<std::string> names{tname};
    names.insert(names.end(), xctx->names().begin(), xctx->names().end());
    ContextPtr ctx = VariableContext::make(names);

    auto lift = [&](const Polynomial<F>& p, long long tpow) {
        std::vector<typename Polynomial<F>::Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<long long> e;
            e.reserve(ctx->size());
            e.push_back(tpow);
            e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial<F>(ctx, std::move(ts));
    };

    F one{};
    bool have_one = false;
    for (const auto& f : f_list)
        if (!f.is_zero()) {
            one = f.terms()[0].coeff.one_like();
            have_one = true;
            break;
        }
    if (!have_one && !g.is_zero()) {
        one = g.terms()[0].coeff.one_like();
        have_one = true;
    }
    if (!have_one) one = F().one_like();  // over GFp an all-zero instance has no modulus

    AlgebraInstance<F> out{ctx, {}, lift(g, 1), "ideal-to-algebra"};
    for (const auto& f : f_list) out.generators.push_back(lift(f, 1));
    for (std::size_t i = 0; i < xctx->size(); ++i)
        out.generators.push_back(Polynomial<F>::variable(ctx, i + 1, one));
    return out;
}

/// Extracted representation g = sum_j h_j f_j.
template <class F>
struct RepresentationResult {
    std::vector<Polynomial<F>> cofactors;
    long long degree = -1;        // max deg h_j
    std::size_t total_terms = 0;  // total nonzero terms across the h_j
};

/// Read a representation off a certificate p for the reduced instance: keep
/// the component of p in which every term uses exactly one tag of a t*f_j
/// (weight 1 under tags(t*f_j) -> 1, tags(x_i) -> 0), set t = 1 and group
/// by that tag. The certificate is verified against the reduced instance
/// first; failure throws.
template <class F>
RepresentationResult<F> certificate_to_representation(const Polynomial<F>& p,
                                                      const AlgebraInstance<F>& reduced,
                                                      const std::vector<Polynomial<F>>& f_list,
                                                      const Polynomial<F>& g) {
    std::size_t s = f_list.size();
    std::size_t n = g.context()->size();
    if (reduced.generators.size() != s + n || p.context()->size() != s + n)
        throw std::invalid_argument("certificate_to_representation: arity mismatch");
    auto a = reduced.presentation();
    if (!verify_certificate(p, a, reduced.target).ok)
        throw std::invalid_argument("certificate_to_representation: certificate fails to verify");

    std::vector<long long> weights(s + n, 0);
    for (std::size_t j = 0; j < s; ++j) weights[j] = 1;
    Polynomial<F> p1 = p.graded_component(1, weights);

    RepresentationResult<F> out;
    out.cofactors.assign(s, Polynomial<F>(g.context()));
    for (const auto& term : p1.terms()) {
        std::size_t j = s;
        for (std::size_t k = 0; k < s; ++k)
            if (term.mono[k] == 1) { j = k; break; }
        if (j == s) throw std::logic_error("graded component term without a generator tag");
        std::vector<long long> e(n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i] = term.mono[s + i];
        out.cofactors[j] += Polynomial<F>::single_term(g.context(), Monomial(std::move(e)),
                                                       term.coeff);
    }
    Polynomial<F> check(g.context());
    for (std::size_t j = 0; j < s; ++j) {
        check += out.cofactors[j] * f_list[j];
        out.degree = std::max(out.degree, out.cofactors[j].degree());
        out.total_terms += out.cofactors[j].term_count();
    }
    if (check != g)
        throw std::logic_error("certificate_to_representation: extracted representation is wrong");
    return out;
}

}  // namespace subalg
