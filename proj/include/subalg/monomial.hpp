#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace subalg {

namespace detail {
inline long long checked_add(long long a, long long b) {
    if (b > std::numeric_limits<long long>::max() - a)
        throw std::overflow_error("monomial exponent overflow");
    return a + b;
}
inline long long checked_mul_add(long long acc, long long w, long long e) {
    // acc + w*e with overflow detection; weights and exponents are small in
    // practice, the check just refuses to wrap.
    __int128 r = static_cast<__int128>(acc) + static_cast<__int128>(w) * e;
    if (r > std::numeric_limits<long long>::max() || r < std::numeric_limits<long long>::min())
        throw std::overflow_error("weighted degree overflow");
    return static_cast<long long>(r);
}
}  // namespace detail

/// Exponent vector of a fixed ambient width, with the total degree cached.
/// Exponents are machine integers with checked arithmetic: degree blow-up
/// raises std::overflow_error instead of wrapping.
class Monomial {
public:
    explicit Monomial(std::size_t width) : e_(width, 0), deg_(0) {}
    explicit Monomial(std::vector<long long> e) : e_(std::move(e)), deg_(0) {
        for (long long v : e_) {
            if (v < 0) throw std::invalid_argument("negative exponent");
            deg_ = detail::checked_add(deg_, v);
        }
    }
    static Monomial unit(std::size_t width, std::size_t var, long long power = 1) {
        std::vector<long long> e(width, 0);
        e.at(var) = power;
        return Monomial(std::move(e));
    }

    std::size_t width() const { return e_.size(); }
    long long operator[](std::size_t i) const { return e_[i]; }
    const std::vector<long long>& exponents() const { return e_; }
    long long degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    long long degree_on(std::size_t first, std::size_t count) const {
        long long d = 0;
        for (std::size_t i = first; i < first + count; ++i) d = detail::checked_add(d, e_[i]);
        return d;
    }
    long long weighted_degree(std::span<const long long> weights) const {
        if (weights.size() != e_.size())
            throw std::invalid_argument("weight vector width mismatch");
        long long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            d = detail::checked_mul_add(d, weights[i], e_[i]);
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        check_width(o);
        std::vector<long long> e(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) e[i] = detail::checked_add(e_[i], o.e_[i]);
        return Monomial(std::move(e));
    }
    bool divides(const Monomial& o) const {
        check_width(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// this / o; requires o | this.
    Monomial quotient_by(const Monomial& o) const {
        check_width(o);
        std::vector<long long> e(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw std::domain_error("monomial quotient is not exact");
            e[i] = e_[i] - o.e_[i];
        }
        return Monomial(std::move(e));
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_width(b);
        std::vector<long long> e(a.e_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(e));
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_width(b);
        std::vector<long long> e(a.e_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
        return Monomial(std::move(e));
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_width(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    void check_width(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("monomial width mismatch");
    }
    std::vector<long long> e_;
    long long deg_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (long long v : m.exponents()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace subalg
