#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subalg/polynomial.hpp"

namespace subalg {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t position() const { return pos_; }

    std::string natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a variable name", pos_);
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline long long parse_exponent(const std::string& digits, std::size_t pos) {
    try {
        return std::stoll(digits);
    } catch (const std::out_of_range&) {
        throw ParseError("exponent too large for the internal representation", pos);
    }
}

}  // namespace detail

/// Parse the polynomial grammar
///   polynomial := ['-'] term (('+'|'-') term)*
///   term       := coeff ('*' var ('^' nat)?)*  |  var ('^' nat)? ('*' var ('^' nat)?)*
///   coeff      := nat ('/' nat)?
/// against the given roster. `one` fixes the coefficient field (and modulus).
/// Whitespace is insignificant. Unknown variables and malformed input raise
/// ParseError with the offending position.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const ContextPtr& ctx, const F& one) {
    detail::PolyLexer lex(text);
    Polynomial<F> result(ctx);
    if (lex.done()) throw ParseError("empty polynomial", 0);

    bool negative = lex.accept('-');
    if (!negative) lex.accept('+');
    while (true) {
        // one term
        F coeff = one;
        bool need_star = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            std::string num = lex.natural();
            coeff = F::from_decimal(num, one);
            if (lex.accept('/')) {
                std::size_t dpos = lex.position();
                F den = F::from_decimal(lex.natural(), one);
                if (den.is_zero()) throw ParseError("zero denominator", dpos);
                coeff = coeff / den;
            }
            need_star = true;
        }
        Monomial mono(ctx->size());
        while (true) {
            if (need_star && !lex.accept('*')) break;
            std::size_t vpos = lex.position();
            std::string name = lex.identifier();
            if (!ctx->has(name)) throw ParseError("unknown variable '" + name + "'", vpos);
            long long e = 1;
            if (lex.accept('^')) {
                std::size_t epos = lex.position();
                e = detail::parse_exponent(lex.natural(), epos);
            }
            if (e > 0) mono = mono * Monomial::unit(ctx->size(), ctx->index_of(name), e);
            need_star = true;
        }
        if (negative) coeff = -coeff;
        result += Polynomial<F>::single_term(ctx, std::move(mono), std::move(coeff));

        if (lex.done()) break;
        if (lex.accept('+')) negative = false;
        else if (lex.accept('-')) negative = true;
        else throw ParseError("expected '+' or '-' between terms", lex.position());
    }
    return result;
}

}  // namespace subalg
