#ifndef PISIGMA_RATIONAL_HPP
#define PISIGMA_RATIONAL_HPP

// Exact rational scalars (GMP) plus the small integer utilities the rest of
// the library needs: checked conversions, prime-exponent splitting, binomials.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisigma {

using rat = mpq_class;
using bigint = mpz_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline rat rat_of(long n, long d = 1)
{
    rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const rat& a) { return sgn(a) == 0; }
inline bool is_one(const rat& a) { return a == 1; }

inline bool is_integer(const rat& a) { return a.get_den() == 1; }

inline std::optional<long> to_long(const rat& a)
{
    if (!is_integer(a) || !a.get_num().fits_slong_p())
        return std::nullopt;
    return a.get_num().get_si();
}

inline long to_long_or_throw(const rat& a, const char* what)
{
    auto n = to_long(a);
    if (!n)
        throw error(std::string("expected a machine integer in ") + what);
    return *n;
}

inline rat rat_pow(const rat& a, long e)
{
    if (e == 0)
        return rat(1);
    if (is_zero(a) && e < 0)
        throw error("division by zero");
    rat base = e > 0 ? a : rat(1) / a;
    unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), n);
    return r;
}

// falling factorial x(x-1)...(x-l+1) / l!, the polynomial binomial C(x, l)
// evaluated at a rational point
inline rat binomial_rat(const rat& x, long l)
{
    if (l < 0)
        return rat(0);
    rat acc(1);
    for (long i = 0; i < l; ++i)
        acc *= (x - i) / rat(i + 1);
    return acc;
}

inline bigint binomial_int(long n, long k)
{
    if (k < 0)
        return bigint(0);
    bigint b;
    if (n >= 0) {
        mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
        return b;
    }
    // C(n,k) = (-1)^k C(k-n-1, k)
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)(k - n - 1), (unsigned long)k);
    return (k % 2 == 0) ? b : bigint(-b);
}

namespace detail {

inline bigint pollard_rho(const bigint& n)
{
    if (n % 2 == 0)
        return bigint(2);
    bigint x(2), y(2), d(1), c(1);
    auto f = [&](const bigint& v) { return (v * v + c) % n; };
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            bigint diff = x > y ? x - y : y - x;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
        c += 1;
    }
}

inline void factor_into(bigint n, std::map<bigint, long>& out)
{
    if (n <= 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out[bigint(p)] += 1;
            n /= p;
        }
        if (n == 1)
            return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    bigint d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

// prime -> exponent map of |n|, n != 0
inline std::map<bigint, long> factor_integer(const bigint& n)
{
    if (n == 0)
        throw error("factor_integer: zero");
    std::map<bigint, long> out;
    bigint m = abs(n);
    detail::factor_into(m, out);
    return out;
}

// signed prime exponent vector of a nonzero rational: primes -> exponents
inline std::map<bigint, long> factor_rational(const rat& a)
{
    if (is_zero(a))
        throw error("factor_rational: zero");
    std::map<bigint, long> out = factor_integer(bigint(a.get_num()));
    for (auto& [p, e] : factor_integer(bigint(a.get_den())))
        out[p] -= e;
    return out;
}

} // namespace pisigma

#endif
