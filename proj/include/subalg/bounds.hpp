#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace subalg {

namespace detail {

/// base^exp for big operands, refusing results that would not fit in memory
/// (the formulas are tower-exponential; callers get an honest error instead
/// of an allocation failure).
inline mpz_class pow_checked(const mpz_class& base, const mpz_class& exp) {
    if (exp < 0) throw std::invalid_argument("pow_checked: negative exponent");
    if (base == 0) return exp == 0 ? 1 : 0;
    if (base == 1) return 1;
    if (!exp.fits_ulong_p())
        throw std::overflow_error("degree bound too large to evaluate exactly");
    unsigned long e = exp.get_ui();
    double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) * e;
    if (bits > 1e9) throw std::overflow_error("degree bound too large to evaluate exactly");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline mpq_class pow_checked(const mpq_class& base, const mpz_class& exp) {
    mpq_class r(pow_checked(mpq_class(base).get_num(), exp),
                pow_checked(mpq_class(base).get_den(), exp));
    r.canonicalize();
    return r;
}

inline mpz_class two_to(unsigned n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

inline mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace detail

/// Representation-degree bound deg g + (d*s)^(2^n).
inline mpz_class bound_hermann(unsigned n, unsigned long s, unsigned long d, unsigned long deg_g) {
    mpz_class base = mpz_class(d) * mpz_class(s);
    return mpz_class(deg_g) + detail::pow_checked(base, detail::two_to(n));
}

/// Complete-intersection representation bound deg g + d^s.
inline mpz_class bound_ci(unsigned long s, unsigned long d, unsigned long deg_g) {
    return mpz_class(deg_g) + detail::pow_checked(mpz_class(d), mpz_class(s));
}

/// Groebner-basis degree bound 2*(d1^2/2 + d1)^(2^(n-1)), rounded up when
/// the exact rational value is not an integer.
inline mpz_class bound_dube(unsigned n, unsigned long d1) {
    if (n < 1) throw std::invalid_argument("bound_dube: n must be >= 1");
    mpq_class base(mpz_class(d1) * mpz_class(d1), 2);
    base.canonicalize();
    base += d1;
    return detail::ceil_q(2 * detail::pow_checked(base, detail::two_to(n - 1)));
}

/// Dimension-refined bound 2*((d1...d_{n-r})^(2(n-r))/2 + d1)^(2^r) for an
/// ideal of dimension r; degrees must be sorted nonincreasing.
inline mpz_class bound_mayr_ritscher(unsigned n, unsigned r,
                                     std::span<const unsigned long> degrees) {
    if (r > n) throw std::invalid_argument("bound_mayr_ritscher: r must be <= n");
    if (degrees.size() != static_cast<std::size_t>(n - r) || degrees.empty())
        throw std::invalid_argument("bound_mayr_ritscher: need exactly n-r >= 1 degrees");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] > degrees[i - 1])
            throw std::invalid_argument("bound_mayr_ritscher: degrees must be nonincreasing");
    mpz_class prod = 1;
    for (unsigned long d : degrees) prod *= mpz_class(d);
    mpq_class base(detail::pow_checked(prod, mpz_class(2) * (n - r)), 2);
    base.canonicalize();
    base += degrees[0];
    return detail::ceil_q(2 * detail::pow_checked(base, detail::two_to(r)));
}

/// Certification-degree bound
///   deg g + ((d^(2 s^2)/2 + d)^(2^n) + 1)^((n+s)^2 + 1) * (deg g)^(n+s),
/// evaluated in exact rationals, rounded up when not an integer.
inline mpz_class bound_certification(unsigned n, unsigned long s, unsigned long d,
                                     unsigned long deg_g) {
    mpq_class inner(detail::pow_checked(mpz_class(d), mpz_class(2) * mpz_class(s) * mpz_class(s)), 2);
    inner.canonicalize();
    inner += d;
    mpq_class q = detail::pow_checked(inner, detail::two_to(n)) + 1;
    mpz_class outer_exp = mpz_class(n + s) * mpz_class(n + s) + 1;
    mpq_class value = detail::pow_checked(q, outer_exp) *
                      detail::pow_checked(mpz_class(deg_g), mpz_class(n) + mpz_class(s));
    value += deg_g;
    return detail::ceil_q(value);
}

}  // namespace subalg
