#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subalg/context.hpp"
#include "subalg/monomial.hpp"
#include "subalg/order.hpp"

namespace subalg {

namespace detail {
// Canonical storage order for terms: descending lexicographic.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto& x = a.exponents();
        const auto& y = b.exponents();
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
            if (x[i] != y[i]) return x[i] > y[i];
        return x.size() > y.size();
    }
};
}  // namespace detail

/// Sparse polynomial over an exact coefficient field F. Terms are kept in a
/// canonically sorted vector (descending lex) with no zero coefficients; the
/// zero polynomial has no terms. Immutable in spirit: all operations return
/// new values.
template <class F>
class Polynomial {
public:
    struct Term {
        Monomial mono;
        F coeff;
    };

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("polynomial needs a context");
    }
    Polynomial(ContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("polynomial needs a context");
        std::map<Monomial, F, detail::LexGreater> acc;
        for (auto& t : terms) {
            if (t.mono.width() != ctx_->size())
                throw std::invalid_argument("term does not conform to the context");
            acc[t.mono] += t.coeff;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) terms_.push_back({m, c});
    }

    static Polynomial constant(ContextPtr ctx, F c) {
        Polynomial p(std::move(ctx));
        if (!c.is_zero()) p.terms_.push_back({Monomial(p.ctx_->size()), std::move(c)});
        return p;
    }
    static Polynomial variable(ContextPtr ctx, std::size_t var, F one) {
        Polynomial p(std::move(ctx));
        if (!one.is_zero())
            p.terms_.push_back({Monomial::unit(p.ctx_->size(), var), std::move(one)});
        return p;
    }
    static Polynomial single_term(ContextPtr ctx, Monomial m, F c) {
        Polynomial p(std::move(ctx));
        if (m.width() != p.ctx_->size())
            throw std::invalid_argument("term does not conform to the context");
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long long degree() const {
        long long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }
    long long weighted_degree(std::span<const long long> w) const {
        long long d = std::numeric_limits<long long>::min();
        for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(w));
        return is_zero() ? -1 : d;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial() const { return terms_.size() == 2; }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_[0].mono.degree()) return false;
        return true;
    }
    bool is_weighted_homogeneous(std::span<const long long> w) const {
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(w) != terms_[0].mono.weighted_degree(w)) return false;
        return true;
    }

    /// Largest term under ord; the zero polynomial yields the zero term
    /// (monomial 1, coefficient 0).
    Term initial_term(const MonomialOrder& ord) const {
        if (terms_.empty()) return {Monomial(ctx_->size()), F()};
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    F coefficient_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return F();
    }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }
    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }
    Polynomial operator*(const Polynomial& o) const {
        require_same_context(ctx_, o.ctx_, "polynomial *");
        std::map<Monomial, F, detail::LexGreater> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
        Polynomial r(ctx_);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }
    Polynomial scaled(const F& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }
    Polynomial times_term(const Monomial& m, const F& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Divide by the leading coefficient under ord.
    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(initial_term(ord).coeff.inverse());
    }

    /// Sum of the terms of weighted degree exactly d.
    Polynomial graded_component(long long d, std::span<const long long> weights) const {
        Polynomial r(ctx_);
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(weights) == d) r.terms_.push_back(t);
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_context(ctx_, o.ctx_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Polynomial merged(const Polynomial& o, bool subtract) const {
        require_same_context(ctx_, o.ctx_, "polynomial +/-");
        Polynomial r(ctx_);
        detail::LexGreater gt;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && gt(terms_[i].mono, o.terms_[j].mono))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || gt(o.terms_[j].mono, terms_[i].mono)) {
                const auto& t = o.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                F c = subtract ? terms_[i].coeff - o.terms_[j].coeff
                               : terms_[i].coeff + o.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F>& base, long long e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    if (e == 0) {
        if (base.is_zero()) throw std::domain_error("pow: 0^0");
        return Polynomial<F>::constant(base.context(), base.terms()[0].coeff.one_like());
    }
    Polynomial<F> acc = base;
    Polynomial<F> result(base.context());
    bool have = false;
    long long k = e;
    while (k) {
        if (k & 1) {
            result = have ? result * acc : acc;
            have = true;
        }
        k >>= 1;
        if (k) acc = acc * acc;
    }
    return result;
}

/// Substitute args[i] for variable i of p and expand. This is the
/// certificate-checking primitive: the result lives over the args' context.
template <class F>
Polynomial<F> evaluate(const Polynomial<F>& p, std::span<const Polynomial<F>> args) {
    if (p.context()->size() != args.size())
        throw std::invalid_argument("evaluate: arity mismatch");
    ContextPtr target;
    for (const auto& a : args) {
        if (!target) target = a.context();
        else require_same_context(target, a.context(), "evaluate");
    }
    if (!target) {
        // no variables to substitute: p is a constant over the empty context
        target = VariableContext::make({});
    }
    // lazily cached powers of each argument
    std::vector<std::vector<Polynomial<F>>> powers(args.size());
    auto arg_power = [&](std::size_t i, long long e) -> const Polynomial<F>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(args[i]);  // cache[k] = args[i]^(k+1)
        while (static_cast<long long>(cache.size()) < e) cache.push_back(cache.back() * args[i]);
        return cache[static_cast<std::size_t>(e - 1)];
    };
    Polynomial<F> result(target);
    for (const auto& t : p.terms()) {
        Polynomial<F> prod = Polynomial<F>::constant(target, t.coeff);
        for (std::size_t i = 0; i < args.size(); ++i) {
            long long e = t.mono[i];
            if (e > 0) prod = prod * arg_power(i, e);
        }
        result += prod;
    }
    return result;
}

template <class F>
Polynomial<F> evaluate(const Polynomial<F>& p, const std::vector<Polynomial<F>>& args) {
    return evaluate(p, std::span<const Polynomial<F>>(args));
}

/// Deterministic textual form: terms sorted descending under ord,
/// coefficient 1 suppressed, e.g. "x1^2*x2 - 1/2*x2 + 3".
template <class F>
std::string to_string(const Polynomial<F>& p, const MonomialOrder& ord = MonomialOrder::lex()) {
    if (p.is_zero()) return "0";
    std::vector<typename Polynomial<F>::Term> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(),
                     [&](const auto& a, const auto& b) { return ord.greater(a.mono, b.mono); });
    std::ostringstream out;
    bool first = true;
    for (const auto& t : ts) {
        F c = t.coeff;
        if (first) {
            if (c.negative()) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.negative() ? " - " : " + ");
            if (c.negative()) c = -c;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.width(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.context()->name(i);
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) {
            out << c.str();
        } else if (c.is_one()) {
            out << mono;
        } else {
            out << c.str() << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace subalg
