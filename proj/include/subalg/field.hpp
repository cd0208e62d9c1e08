#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace subalg {

/// Exact rational coefficient backed by GMP. Values are kept canonical:
/// lowest terms, positive denominator, 0 = 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { require_nonzero_den(); q_.canonicalize(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { require_nonzero_den(); q_.canonicalize(); }
    static Rational from_decimal(const std::string& digits, const Rational&) {
        return Rational(mpq_class(digits, 10));  // explicit base; "09" is not octal
    }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    Rational one_like() const { return Rational(1); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }
    bool negative() const { return q_ < 0; }
    Rational abs() const { return negative() ? -*this : *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    std::string str() const { return q_.get_str(); }

    static std::string field_name() { return "Q"; }

private:
    void require_nonzero_den() {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

/// Residue coefficient modulo a prime p, value always in [0, p).
///
/// Elements carry their modulus. The default-constructed value is the
/// modulus-free zero, so containers can value-initialize; it binds to the
/// other operand's modulus on first use. Mixing two different moduli throws.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(std::uint64_t v, std::uint64_t p) : p_(p) {
        check_modulus(p);
        v_ = v % p;
    }
    static GFp from_signed(long long v, std::uint64_t p) {
        check_modulus(p);
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return GFp(static_cast<std::uint64_t>(r), p);
    }
    static GFp from_decimal(const std::string& digits, const GFp& like) {
        if (like.p_ == 0) throw std::invalid_argument("GFp: parsing needs a bound modulus");
        mpz_class z(digits, 10);
        mpz_class r = z % static_cast<unsigned long>(like.p_);
        return GFp(r.get_ui(), like.p_);
    }
    static void check_modulus(std::uint64_t p) {
        if (p < 2 || p > (1ull << 62) || !detail::is_prime_u64(p))
            throw std::invalid_argument("GFp: modulus must be a prime < 2^62");
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    GFp one_like() const {
        if (p_ == 0) throw std::logic_error("GFp: one_like on unbound zero");
        return GFp(1, p_);
    }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    GFp operator-() const {
        if (p_ == 0) return *this;
        return GFp(v_ == 0 ? 0 : p_ - v_, p_);
    }
    GFp operator+(const GFp& o) const {
        std::uint64_t p = join(o);
        if (p == 0) return GFp();
        std::uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return GFp(s, p);
    }
    GFp operator-(const GFp& o) const { return *this + (-o); }
    GFp operator*(const GFp& o) const {
        std::uint64_t p = join(o);
        if (p == 0) return GFp();
        return GFp(detail::mulmod(v_, o.v_, p), p);
    }
    GFp operator/(const GFp& o) const { return *this * o.inverse(); }
    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }
    GFp inverse() const {
        if (is_zero()) throw std::domain_error("GFp: inverse of zero");
        return GFp(detail::powmod(v_, p_ - 2, p_), p_);
    }
    bool negative() const { return false; }
    GFp abs() const { return *this; }

    bool operator==(const GFp& o) const {
        if (is_zero() && o.is_zero()) return true;
        return p_ == o.p_ && v_ == o.v_;
    }
    bool operator!=(const GFp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }
    static std::string field_name() { return "Fp"; }

private:
    std::uint64_t join(const GFp& o) const {
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        if (p_ != o.p_) throw std::invalid_argument("GFp: mixed moduli");
        return p_;
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace subalg
