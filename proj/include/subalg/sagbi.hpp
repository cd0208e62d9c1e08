#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subalg/field.hpp"
#include "subalg/groebner.hpp"
#include "subalg/monalg.hpp"
#include "subalg/polynomial.hpp"

namespace subalg {

/// A candidate SAGBI basis: monic nonzero polynomials under a fixed order,
/// with their initial exponent vectors cached.
template <class F>
struct SagbiCandidate {
    ContextPtr ctx;
    MonomialOrder ord = MonomialOrder::lex();
    std::vector<Polynomial<F>> basis;
    std::vector<std::vector<long long>> initial_exponents;

    static SagbiCandidate make(ContextPtr ctx, MonomialOrder ord,
                               std::vector<Polynomial<F>> polys) {
        SagbiCandidate s;
        s.ctx = std::move(ctx);
        s.ord = std::move(ord);
        for (auto& p : polys) {
            if (p.is_zero()) throw std::invalid_argument("sagbi candidate: zero basis element");
            require_same_context(s.ctx, p.context(), "sagbi candidate");
            s.basis.push_back(p.monic(s.ord));
            s.initial_exponents.push_back(s.basis.back().initial_term(s.ord).mono.exponents());
        }
        return s;
    }

    MonomialAlgebra initial_algebra() const {
        return MonomialAlgebra::make(ctx->size(), initial_exponents);
    }

    ContextPtr tag_context() const {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= basis.size(); ++i) names.push_back("u" + std::to_string(i));
        return VariableContext::make_blocks({{"u", names}});
    }
};

/// input = evaluate(certificate, basis) + remainder, exactly; the initial
/// monomial of a nonzero remainder is not a product of basis initial
/// monomials.
template <class F>
struct SubductionResult {
    Polynomial<F> remainder;
    Polynomial<F> certificate;  // over the candidate's tag context
};

/// Subduction: repeatedly cancel ini(f) by a monomial in the basis elements.
/// Terminates because the initial monomial strictly decreases and the order
/// is a well-order. Constants are absorbed into the certificate (the empty
/// product of basis elements).
template <class F>
SubductionResult<F> subduct(const Polynomial<F>& f, const SagbiCandidate<F>& s) {
    require_same_context(f.context(), s.ctx, "subduct");
    MonomialAlgebra ini_alg = s.initial_algebra();
    ContextPtr tags = s.tag_context();
    Polynomial<F> h = f;
    Polynomial<F> cert(tags);
    while (!h.is_zero()) {
        auto lt = h.initial_term(s.ord);
        auto combo = monomial_membership(ini_alg, lt.mono.exponents());
        if (!combo) break;
        Polynomial<F> prod = Polynomial<F>::constant(s.ctx, lt.coeff);
        for (std::size_t i = 0; i < s.basis.size(); ++i)
            if ((*combo)[i] > 0) prod *= pow(s.basis[i], (*combo)[i]);
        h -= prod;
        cert += Polynomial<F>::single_term(tags, Monomial(*combo), lt.coeff);
        if (!h.is_zero() && !s.ord.less(h.initial_term(s.ord).mono, lt.mono))
            throw std::logic_error("subduction failed to decrease the initial monomial");
    }
    return {std::move(h), std::move(cert)};
}

/// A binomial relation u^lhs - u^rhs in the kernel of u_i -> x^{alpha_i}.
struct ToricRelation {
    std::vector<long long> lhs, rhs;
};

inline void sort_relations(std::vector<ToricRelation>& rels) {
    auto mono_deg = [](const std::vector<long long>& v) {
        long long d = 0;
        for (long long e : v) d += e;
        return d;
    };
    std::stable_sort(rels.begin(), rels.end(), [&](const ToricRelation& a, const ToricRelation& b) {
        long long da = std::max(mono_deg(a.lhs), mono_deg(a.rhs));
        long long db = std::max(mono_deg(b.lhs), mono_deg(b.rhs));
        if (da != db) return da < db;
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    });
}

/// Generators of the toric kernel of the monomial map u_i -> x^{alpha_i},
/// computed by eliminating x from <u_i - x^{alpha_i}>. The combinatorics is
/// field-independent, so the elimination runs over Q.
inline std::vector<ToricRelation> toric_kernel(
    const std::vector<std::vector<long long>>& exponents) {
    if (exponents.empty()) return {};
    std::size_t dim = exponents[0].size();
    std::size_t s = exponents.size();
    std::vector<std::string> xs, us;
    for (std::size_t i = 1; i <= dim; ++i) xs.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= s; ++i) us.push_back("u" + std::to_string(i));
    ContextPtr ctx = VariableContext::make_blocks({{"x", xs}, {"u", us}});
    std::vector<Polynomial<Rational>> gens;
    for (std::size_t i = 0; i < s; ++i) {
        if (exponents[i].size() != dim)
            throw std::invalid_argument("toric_kernel: exponent dimension mismatch");
        std::vector<long long> e = exponents[i];
        e.resize(dim + s, 0);
        gens.push_back(Polynomial<Rational>::variable(ctx, dim + i, Rational(1)) -
                       Polynomial<Rational>::single_term(ctx, Monomial(std::move(e)), Rational(1)));
    }
    MonomialOrder ord = MonomialOrder::block({dim, s}, {OrderKind::lex, OrderKind::grlex});
    auto gb = reduce_basis(buchberger(gens, ord));
    std::vector<ToricRelation> rels;
    for (const auto& g : gb.elements()) {
        bool u_only = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < dim && u_only; ++i)
                if (t.mono[i] != 0) u_only = false;
        if (!u_only) continue;
        if (g.term_count() != 2)
            throw std::logic_error("toric_kernel: non-binomial element in the elimination ideal");
        auto strip = [&](const Monomial& m) {
            return std::vector<long long>(m.exponents().begin() + static_cast<long>(dim),
                                          m.exponents().end());
        };
        const auto& lead = g.initial_term(ord);
        const auto& other = g.terms()[0].mono == lead.mono ? g.terms()[1] : g.terms()[0];
        if (!lead.coeff.is_one() || other.coeff != Rational(-1))
            throw std::logic_error("toric_kernel: element is not a pure difference");
        ToricRelation rel{strip(lead.mono), strip(other.mono)};
        // sanity: both sides map to the same x-monomial
        std::vector<long long> la(dim, 0), rb(dim, 0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                la[k] += rel.lhs[i] * exponents[i][k];
                rb[k] += rel.rhs[i] * exponents[i][k];
            }
        if (la != rb) throw std::logic_error("toric_kernel: relation does not vanish");
        rels.push_back(std::move(rel));
    }
    sort_relations(rels);
    return rels;
}

enum class SagbiStatus { yes, no, unknown };

template <class F>
struct SagbiCheck {
    SagbiStatus status = SagbiStatus::unknown;
    std::optional<Polynomial<F>> witness_lift;       // a lifted relation, when status == no
    std::optional<Polynomial<F>> witness_remainder;  // its nonzero subduction remainder
};

namespace detail {

template <class F>
Polynomial<F> lift_relation(const SagbiCandidate<F>& s, const ToricRelation& rel) {
    F one = s.basis[0].terms()[0].coeff.one_like();
    Polynomial<F> pa = Polynomial<F>::constant(s.ctx, one);
    Polynomial<F> pb = Polynomial<F>::constant(s.ctx, one);
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        if (rel.lhs[i] > 0) pa *= pow(s.basis[i], rel.lhs[i]);
        if (rel.rhs[i] > 0) pb *= pow(s.basis[i], rel.rhs[i]);
    }
    return pa - pb;
}

template <class F>
long long lift_degree(const SagbiCandidate<F>& s, const ToricRelation& rel) {
    long long da = 0, db = 0;
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        da += rel.lhs[i] * s.basis[i].degree();
        db += rel.rhs[i] * s.basis[i].degree();
    }
    return std::max(da, db);
}

}  // namespace detail

/// Robbiano-Sweedler test: S is a SAGBI basis iff every binomial relation
/// among the initial monomials lifts to a polynomial that subducts to 0.
/// Relations whose lift exceeds the degree cap are not checked; if any were
/// skipped and no counterexample was found the answer is unknown.
template <class F>
SagbiCheck<F> is_sagbi(const SagbiCandidate<F>& s, long long degree_cap = 20) {
    SagbiCheck<F> out;
    if (s.basis.empty()) {
        out.status = SagbiStatus::yes;
        return out;
    }
    auto rels = toric_kernel(s.initial_exponents);
    bool skipped = false;
    for (const auto& rel : rels) {
        if (detail::lift_degree(s, rel) > degree_cap) {
            skipped = true;
            continue;
        }
        Polynomial<F> lift = detail::lift_relation(s, rel);
        auto sub = subduct(lift, s);
        if (!sub.remainder.is_zero()) {
            out.status = SagbiStatus::no;
            out.witness_lift = std::move(lift);
            out.witness_remainder = std::move(sub.remainder);
            return out;
        }
    }
    out.status = skipped ? SagbiStatus::unknown : SagbiStatus::yes;
    return out;
}

enum class CompletionStatus { finished, cap_reached };

template <class F>
struct CompletionLogEntry {
    unsigned round;
    Polynomial<F> element;
    Monomial initial;
};

template <class F>
struct CompletionResult {
    CompletionStatus status = CompletionStatus::finished;
    SagbiCandidate<F> candidate;
    /// certificates[i] expresses candidate.basis[i] over the tag variables
    /// of the ORIGINAL generator list (verified members of K[F]).
    std::vector<Polynomial<F>> certificates;
    ContextPtr original_tags;
    std::vector<std::vector<long long>> new_initial_exponents;
    std::vector<CompletionLogEntry<F>> log;
    unsigned rounds = 0;
};

/// Capped SAGBI completion (a semi-algorithm: terminates exactly when a
/// finite SAGBI basis exists, so both caps are surfaced honestly in the
/// result). Every appended element carries a certificate over the original
/// generators, re-verified by evaluation at append time.
template <class F>
CompletionResult<F> sagbi_completion(const std::vector<Polynomial<F>>& f_list,
                                     const MonomialOrder& ord, long long degree_cap = 20,
                                     unsigned round_cap = 50) {
    if (degree_cap <= 0 || round_cap == 0)
        throw std::invalid_argument("sagbi_completion: caps must be positive");
    CompletionResult<F> out;
    ContextPtr ctx;
    for (const auto& f : f_list)
        if (!ctx) ctx = f.context();
        else require_same_context(ctx, f.context(), "sagbi_completion");
    if (!ctx) throw std::invalid_argument("sagbi_completion: empty generator list");

    std::vector<std::string> tnames;
    for (std::size_t i = 1; i <= f_list.size(); ++i) tnames.push_back("t" + std::to_string(i));
    out.original_tags = VariableContext::make_blocks({{"t", tnames}});

    std::vector<Polynomial<F>> basis;
    std::vector<Polynomial<F>> certs;
    for (std::size_t i = 0; i < f_list.size(); ++i) {
        if (f_list[i].is_zero()) continue;
        F lc = f_list[i].initial_term(ord).coeff;
        basis.push_back(f_list[i].scaled(lc.inverse()));
        certs.push_back(Polynomial<F>::variable(out.original_tags, i, lc.inverse()));
    }
    if (basis.empty()) throw std::invalid_argument("sagbi_completion: all generators are zero");

    SagbiCandidate<F> cand = SagbiCandidate<F>::make(ctx, ord, basis);
    for (unsigned round = 1; round <= round_cap; ++round) {
        out.rounds = round;
        auto rels = toric_kernel(cand.initial_exponents);
        bool added = false;
        bool skipped = false;
        std::size_t frozen = basis.size();  // relations refer to this prefix
        for (const auto& rel : rels) {
            if (rel.lhs == rel.rhs) continue;
            F one = basis[0].terms()[0].coeff.one_like();
            Polynomial<F> pa = Polynomial<F>::constant(ctx, one);
            Polynomial<F> pb = Polynomial<F>::constant(ctx, one);
            for (std::size_t i = 0; i < frozen; ++i) {
                if (rel.lhs[i] > 0) pa *= pow(basis[i], rel.lhs[i]);
                if (rel.rhs[i] > 0) pb *= pow(basis[i], rel.rhs[i]);
            }
            Polynomial<F> lift = pa - pb;
            if (lift.is_zero()) continue;
            auto sub = subduct(lift, cand);
            if (sub.remainder.is_zero()) continue;
            if (sub.remainder.degree() > degree_cap) {
                skipped = true;
                continue;
            }
            // certificate over the original tags: lift minus the subducted part
            Polynomial<F> ca = Polynomial<F>::constant(out.original_tags, one);
            Polynomial<F> cb = Polynomial<F>::constant(out.original_tags, one);
            for (std::size_t i = 0; i < frozen; ++i) {
                if (rel.lhs[i] > 0) ca *= pow(certs[i], rel.lhs[i]);
                if (rel.rhs[i] > 0) cb *= pow(certs[i], rel.rhs[i]);
            }
            Polynomial<F> sub_cert = evaluate(sub.certificate, certs);
            F lc = sub.remainder.initial_term(ord).coeff;
            Polynomial<F> element = sub.remainder.scaled(lc.inverse());
            Polynomial<F> cert = (ca - cb - sub_cert).scaled(lc.inverse());
            if (evaluate(cert, f_list) != element)
                throw std::logic_error("sagbi_completion: certificate failed to re-verify");
            basis.push_back(element);
            certs.push_back(cert);
            out.new_initial_exponents.push_back(element.initial_term(ord).mono.exponents());
            out.log.push_back({round, element, element.initial_term(ord).mono});
            cand = SagbiCandidate<F>::make(ctx, ord, basis);
            added = true;
        }
        if (!added) {
            out.status = skipped ? CompletionStatus::cap_reached : CompletionStatus::finished;
            out.candidate = cand;
            out.certificates = certs;
            return out;
        }
    }
    out.status = CompletionStatus::cap_reached;
    out.candidate = cand;
    out.certificates = certs;
    return out;
}

/// Membership of a monomial in the initial algebra, decided relative to a
/// VERIFIED finite SAGBI basis (the semi-decidable general problem is not
/// guessed at): the precondition is re-checked and violations throw.
template <class F>
bool initial_algebra_membership(const Monomial& m, const SagbiCandidate<F>& s,
                                long long degree_cap = 20) {
    auto check = is_sagbi(s, degree_cap);
    if (check.status != SagbiStatus::yes)
        throw std::logic_error(
            "initial_algebra_membership: candidate is not a verified SAGBI basis");
    return monomial_membership(s.initial_algebra(), m.exponents()).has_value();
}

}  // namespace subalg
