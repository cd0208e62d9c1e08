#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subalg/csg.hpp"
#include "subalg/polynomial.hpp"

namespace subalg {

/// The homogeneous binary-counting subalgebra: over the variables
/// q0, q1, h0..hn, x{i}_0, x{i}_1 the 3n rule binomials
///   R1_i: q0*h_i*x{i}_0 - q1*h_{i-1}*x{i}_1        (1 <= i <= n)
///   R2_i: q0*h_i*x{i}_1 - q0*h_{i+1}*x{i}_0        (1 <= i <= n-1)
///   R3_i: q1*h_i*x{i}_0 - q1*h_{i-1}*x{i}_0        (1 <= i <= n)
///   R4:   q1*h0 - q0*h1
/// together with the 2n single variables x{i}_b generate an algebra
/// containing the degree-(n+2) binomial
///   g = q0*h1*x1_0...xn_0 - q0*hn*x1_0...x{n-1}_0*xn_1,
/// and every certificate for g needs one term per rewriting step.
template <class F>
struct BinaryCounterInstance {
    unsigned n = 0;
    ContextPtr ctx;
    std::vector<std::string> labels;          // R1_1..R4, then the variable generators
    std::vector<Polynomial<F>> generators;    // 3n binomials then 2n variables (5n total)
    Polynomial<F> target;
    CsgSystem csg;                            // the 3n binomials as replacement rules
    Monomial start, goal;                     // the two monomials of the target
    std::vector<std::size_t> var_tag;         // variable index -> generator index (or npos)

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

template <class F>
BinaryCounterInstance<F> binary_counting_subalgebra(unsigned n, F one) {
    if (n < 1) throw std::invalid_argument("binary_counting_subalgebra: n must be >= 1");
    std::vector<std::string> names{"q0", "q1"};
    for (unsigned i = 0; i <= n; ++i) names.push_back("h" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i) + "_0");
        names.push_back("x" + std::to_string(i) + "_1");
    }
    ContextPtr ctx = VariableContext::make(names);
    auto idx = [&](const std::string& s) { return ctx->index_of(s); };
    auto q0 = idx("q0"), q1 = idx("q1");
    auto h = [&](unsigned i) { return idx("h" + std::to_string(i)); };
    auto x = [&](unsigned i, int b) {
        return idx("x" + std::to_string(i) + "_" + std::to_string(b));
    };
    auto mono3 = [&](std::size_t a, std::size_t b, std::size_t c) {
        std::vector<long long> e(ctx->size(), 0);
        e[a] += 1, e[b] += 1, e[c] += 1;
        return Monomial(std::move(e));
    };
    auto mono2 = [&](std::size_t a, std::size_t b) {
        std::vector<long long> e(ctx->size(), 0);
        e[a] += 1, e[b] += 1;
        return Monomial(std::move(e));
    };

    std::vector<std::string> labels;
    std::vector<Polynomial<F>> generators;
    std::vector<std::pair<Monomial, Monomial>> rules;
    auto add_rule = [&](const std::string& label, Monomial lhs, Monomial rhs) {
        labels.push_back(label);
        generators.push_back(Polynomial<F>::single_term(ctx, lhs, one) -
                             Polynomial<F>::single_term(ctx, rhs, one));
        rules.emplace_back(std::move(lhs), std::move(rhs));
    };
    for (unsigned i = 1; i <= n; ++i)
        add_rule("R1_" + std::to_string(i), mono3(q0, h(i), x(i, 0)), mono3(q1, h(i - 1), x(i, 1)));
    for (unsigned i = 1; i + 1 <= n; ++i)
        add_rule("R2_" + std::to_string(i), mono3(q0, h(i), x(i, 1)), mono3(q0, h(i + 1), x(i, 0)));
    for (unsigned i = 1; i <= n; ++i)
        add_rule("R3_" + std::to_string(i), mono3(q1, h(i), x(i, 0)), mono3(q1, h(i - 1), x(i, 0)));
    add_rule("R4", mono2(q1, h(0)), mono2(q0, h(1)));

    std::vector<std::size_t> var_tag(ctx->size(), BinaryCounterInstance<F>::npos);
    for (unsigned i = 1; i <= n; ++i) {
        for (int b = 0; b <= 1; ++b) {
            labels.push_back(names[x(i, b)]);
            var_tag[x(i, b)] = generators.size();
            generators.push_back(Polynomial<F>::variable(ctx, x(i, b), one));
        }
    }

    std::vector<long long> e0(ctx->size(), 0), e1(ctx->size(), 0);
    e0[q0] = 1, e0[h(1)] = 1;
    e1[q0] = 1, e1[h(n)] = 1;
    for (unsigned i = 1; i <= n; ++i) e0[x(i, 0)] = 1;
    for (unsigned i = 1; i + 1 <= n; ++i) e1[x(i, 0)] = 1;
    e1[x(n, 1)] = 1;
    Monomial start(std::move(e0)), goal(std::move(e1));
    Polynomial<F> target = Polynomial<F>::single_term(ctx, start, one) -
                           Polynomial<F>::single_term(ctx, goal, one);
    return BinaryCounterInstance<F>{n,
                                    ctx,
                                    std::move(labels),
                                    std::move(generators),
                                    std::move(target),
                                    CsgSystem::make(ctx, std::move(rules)),
                                    std::move(start),
                                    std::move(goal),
                                    std::move(var_tag)};
}

/// Tag context for the 5n generators of a counter instance.
template <class F>
ContextPtr counter_tag_context(const BinaryCounterInstance<F>& inst) {
    std::vector<std::string> tags;
    for (std::size_t i = 1; i <= inst.generators.size(); ++i)
        tags.push_back("u" + std::to_string(i));
    return VariableContext::make_blocks({{"u", tags}});
}

/// Telescoping certificate from a rewriting path m_0 -> ... -> m_L: one term
/// per step, the tag of the applied rule times the tags of the cofactor
/// variables, so that evaluating at the generators gives m_0 - m_L. Paths
/// whose steps are not single rule applications with an x-variable cofactor
/// are rejected.
template <class F>
Polynomial<F> derive_certificate_from_path(const std::vector<Monomial>& path,
                                           const BinaryCounterInstance<F>& inst, F one) {
    ContextPtr tags = counter_tag_context(inst);
    Polynomial<F> cert(tags);
    if (path.empty()) return cert;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Monomial& cur = path[k];
        const Monomial& nxt = path[k + 1];
        bool matched = false;
        for (std::size_t r = 0; r < inst.csg.rules.size() && !matched; ++r) {
            const auto& [lhs, rhs] = inst.csg.rules[r];
            for (bool forward : {true, false}) {
                const Monomial& from = forward ? lhs : rhs;
                const Monomial& to = forward ? rhs : lhs;
                if (!from.divides(cur)) continue;
                Monomial cofactor = cur.quotient_by(from);
                if (cofactor * to != nxt) continue;
                std::vector<long long> tag_exp(tags->size(), 0);
                tag_exp[r] = 1;
                for (std::size_t v = 0; v < cofactor.width(); ++v) {
                    if (cofactor[v] == 0) continue;
                    if (inst.var_tag[v] == BinaryCounterInstance<F>::npos)
                        throw std::invalid_argument(
                            "derive_certificate_from_path: cofactor uses a non-generator variable");
                    tag_exp[inst.var_tag[v]] = cofactor[v];
                }
                F sign = forward ? one : -one;
                cert += Polynomial<F>::single_term(tags, Monomial(std::move(tag_exp)), sign);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("derive_certificate_from_path: invalid path step");
    }
    return cert;
}

}  // namespace subalg
