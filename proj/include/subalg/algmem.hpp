#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subalg/groebner.hpp"
#include "subalg/polynomial.hpp"

namespace subalg {

/// A finitely generated subalgebra K[f_1,...,f_s], presented by its
/// generators. The structural flags are recomputed from the generators,
/// never trusted from input.
template <class F>
struct SubalgebraPresentation {
    ContextPtr ctx;
    std::vector<Polynomial<F>> generators;
    bool homogeneous = true;
    bool monomial = true;
    bool binomial = true;

    static SubalgebraPresentation make(ContextPtr ctx, std::vector<Polynomial<F>> gens) {
        SubalgebraPresentation a;
        a.ctx = std::move(ctx);
        for (const auto& g : gens) require_same_context(a.ctx, g.context(), "subalgebra");
        a.generators = std::move(gens);
        for (const auto& g : a.generators) {
            a.homogeneous = a.homogeneous && g.is_homogeneous();
            a.monomial = a.monomial && g.is_monomial();
            a.binomial = a.binomial && g.is_binomial();
        }
        return a;
    }
};

/// Tag-variable system for a presentation: one fresh tag t_i per generator,
/// the ideal J = <f_1 - t_1, ..., f_s - t_s> in K[x, t], and an elimination
/// order with the x-block above the t-block (grevlex on x, graded lex on t;
/// the graded t-block keeps certificate degrees small in practice).
template <class F>
struct TagSystem {
    ContextPtr joint;     // x-block then t-block
    ContextPtr tag_ctx;   // t-block alone
    std::vector<Polynomial<F>> ideal_generators;
    MonomialOrder elim_order = MonomialOrder::lex();
    std::size_t nx = 0, nt = 0;
    std::vector<long long> weights;  // x_i -> 1, t_i -> deg f_i; grades f_i - t_i

    static TagSystem make(const SubalgebraPresentation<F>& a) {
        TagSystem sys;
        sys.nx = a.ctx->size();
        sys.nt = a.generators.size();
        std::string base = "t";
        std::vector<std::string> tags;
        while (true) {
            tags.clear();
            bool clash = false;
            for (std::size_t i = 1; i <= sys.nt; ++i) {
                tags.push_back(base + std::to_string(i));
                if (a.ctx->has(tags.back())) clash = true;
            }
            if (!clash) break;
            base += "_";
        }
        sys.joint = VariableContext::make_blocks({{"x", a.ctx->names()}, {"t", tags}});
        sys.tag_ctx = VariableContext::make_blocks({{"t", tags}});
        sys.elim_order = MonomialOrder::block({sys.nx, sys.nt}, {OrderKind::grevlex, OrderKind::grlex});
        sys.weights.assign(sys.nx, 1);
        F one{};
        for (const auto& g : a.generators)
            if (!g.is_zero()) {
                one = g.terms()[0].coeff.one_like();
                break;
            }
        for (std::size_t i = 0; i < sys.nt; ++i) {
            const auto& f = a.generators[i];
            sys.weights.push_back(f.is_zero() ? 0 : f.degree());
            if (one.is_zero()) continue;  // every generator is zero; J is not used
            Polynomial<F> tag = Polynomial<F>::variable(sys.joint, sys.nx + i, one);
            sys.ideal_generators.push_back(lift_poly(f, sys.joint) - tag);
        }
        return sys;
    }

    Polynomial<F> lift(const Polynomial<F>& f) const { return lift_poly(f, joint); }

    /// True when no x-variable occurs in p (p in K[t]).
    bool tags_only(const Polynomial<F>& p) const {
        for (const auto& t : p.terms())
            for (std::size_t i = 0; i < nx; ++i)
                if (t.mono[i] != 0) return false;
        return true;
    }

    Polynomial<F> project_tags(const Polynomial<F>& p) const {
        std::vector<typename Polynomial<F>::Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<long long> e(t.mono.exponents().begin() + static_cast<long>(nx),
                                     t.mono.exponents().end());
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial<F>(tag_ctx, std::move(ts));
    }

private:
    static Polynomial<F> lift_poly(const Polynomial<F>& f, const ContextPtr& joint) {
        std::vector<typename Polynomial<F>::Term> ts;
        for (const auto& t : f.terms()) {
            std::vector<long long> e = t.mono.exponents();
            e.resize(joint->size(), 0);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial<F>(joint, std::move(ts));
    }
};

/// A membership certificate: a polynomial p in the tag variables with
/// g = p(f_1,...,f_s), together with its degree and term count.
template <class F>
struct Certificate {
    Polynomial<F> p;
    long long degree;
    std::size_t terms;
};

template <class F>
struct MembershipVerdict {
    bool member = false;
    std::optional<Certificate<F>> certificate;   // present iff member
    std::optional<Polynomial<F>> witness;        // normal form with an x-variable, iff not member
};

struct VerificationReport {
    bool ok;
    long long degree;
    std::size_t terms;
};

/// Evaluate p at the generators and compare with g exactly.
template <class F>
VerificationReport verify_certificate(const Polynomial<F>& p, const SubalgebraPresentation<F>& a,
                                      const Polynomial<F>& g) {
    if (p.context()->size() != a.generators.size())
        throw std::invalid_argument("verify_certificate: arity mismatch");
    bool ok;
    if (a.generators.empty()) {
        ok = g.is_constant() && !p.is_zero() == !g.is_zero() &&
             (g.is_zero() || Polynomial<F>::constant(a.ctx, p.terms()[0].coeff) == g);
    } else {
        ok = evaluate(p, a.generators) == g;
    }
    return {ok, p.degree(), p.term_count()};
}

namespace detail {

template <class F>
MembershipVerdict<F> verdict_from_normal_form(const TagSystem<F>& sys,
                                              const SubalgebraPresentation<F>& a,
                                              const Polynomial<F>& g, Polynomial<F> nf) {
    MembershipVerdict<F> v;
    if (!sys.tags_only(nf)) {
        v.member = false;
        v.witness = std::move(nf);
        return v;
    }
    Polynomial<F> cert = sys.project_tags(nf);
    auto check = verify_certificate(cert, a, g);
    if (!check.ok)
        throw std::logic_error("internal error: normal-form certificate failed to evaluate back");
    v.member = true;
    v.certificate = Certificate<F>{std::move(cert), check.degree, check.terms};
    return v;
}

}  // namespace detail

/// Decide g in K[f_1,...,f_s] by elimination: compute the reduced Groebner
/// basis of J = <f_i - t_i> under an elimination order and take the normal
/// form of g. The normal form lies in K[t] exactly when g is a member, and
/// is then itself a certificate.
template <class F>
MembershipVerdict<F> decide_membership(const SubalgebraPresentation<F>& a, const Polynomial<F>& g) {
    require_same_context(a.ctx, g.context(), "decide_membership");
    auto sys = TagSystem<F>::make(a);
    if (sys.ideal_generators.empty()) {
        // K[0,...,0] = K: member exactly when g is constant
        MembershipVerdict<F> v;
        if (g.is_constant()) {
            v.member = true;
            F c = g.is_zero() ? F() : g.terms()[0].coeff;
            v.certificate = Certificate<F>{Polynomial<F>::constant(sys.tag_ctx, c),
                                           g.is_zero() ? -1 : 0,
                                           static_cast<std::size_t>(g.is_zero() ? 0 : 1)};
        } else {
            v.member = false;
            v.witness = sys.lift(g);
        }
        return v;
    }
    auto gb = reduce_basis(buchberger(sys.ideal_generators, sys.elim_order));
    return detail::verdict_from_normal_form(sys, a, g, gb.normal_form(sys.lift(g)));
}

/// Homogeneous variant: a certificate of lowest degree has degree at most
/// deg g, so the elimination basis may be truncated at the weighted degree
/// deg g (weights: x_i -> 1, t_i -> deg f_i). Agrees with decide_membership
/// on homogeneous input and rejects anything else.
template <class F>
MembershipVerdict<F> decide_membership_homogeneous(const SubalgebraPresentation<F>& a,
                                                   const Polynomial<F>& g) {
    require_same_context(a.ctx, g.context(), "decide_membership_homogeneous");
    if (!a.homogeneous || !g.is_homogeneous())
        throw std::invalid_argument("decide_membership_homogeneous: input is not homogeneous");
    if (a.generators.empty() || g.is_zero()) return decide_membership(a, g);
    auto sys = TagSystem<F>::make(a);
    long long cap = g.degree();
    auto gb = truncated_groebner(sys.ideal_generators, sys.elim_order, cap, sys.weights);
    return detail::verdict_from_normal_form(sys, a, g, gb.normal_form(sys.lift(g)));
}

}  // namespace subalg
