#ifndef PISIGMA_POLY_GCD_HPP
#define PISIGMA_POLY_GCD_HPP

// Exact divisibility, content/primitive split, primitive-PRS gcd at every
// tower level, resultants, derivatives.

#include "pisigma/polynomial.hpp"

#include <optional>

namespace pisigma {

inline poly poly_derivative(const poly& p, int v)
{
    if (p.level() < v)
        return poly(0);
    if (p.level() == v) {
        std::vector<poly> cs;
        for (int j = 1; j <= p.degree(); ++j)
            cs.push_back(rat(j) * p.coeff_in(v, j));
        return poly::from_coeffs(v, std::move(cs));
    }
    std::vector<poly> cs;
    for (int j = 0; j <= p.degree(); ++j)
        cs.push_back(poly_derivative(p.coeff_in(p.level(), j), v));
    return poly::from_coeffs(p.level(), std::move(cs));
}

// exact division in Q[vars]; nullopt if q does not divide p
inline std::optional<poly> poly_exact_div(const poly& p, const poly& q)
{
    if (q.is_zero())
        throw error("division by zero");
    if (p.is_zero())
        return poly(0);
    if (q.is_constant())
        return poly(rat(1) / q.constant()) * p;
    int v = std::max(p.level(), q.level());
    if (q.level() < v) {
        // divide every v-coefficient of p by q
        std::vector<poly> cs;
        for (auto& c : p.coeffs_in(v)) {
            auto d = poly_exact_div(c, q);
            if (!d)
                return std::nullopt;
            cs.push_back(std::move(*d));
        }
        return poly::from_coeffs(v, std::move(cs));
    }
    if (p.degree_in(v) < q.degree_in(v))
        return std::nullopt;
    poly r = p;
    std::vector<poly> quot(p.degree_in(v) - q.degree_in(v) + 1, poly(0));
    while (!r.is_zero() && r.level() == v && r.degree() >= q.degree()) {
        auto c = poly_exact_div(r.lead(), q.lead());
        if (!c)
            return std::nullopt;
        int sh = r.degree() - q.degree();
        quot[sh] = *c;
        std::vector<poly> shifted(sh, poly(0));
        shifted.push_back(std::move(*c));
        r = r - poly::from_coeffs(v, std::move(shifted)) * q;
    }
    if (!r.is_zero())
        return std::nullopt;
    return poly::from_coeffs(v, std::move(quot));
}

inline poly poly_div_exact(const poly& p, const poly& q)
{
    auto r = poly_exact_div(p, q);
    if (!r)
        throw error("poly_div_exact: not divisible");
    return *r;
}

// pseudo-remainder of a by b in variable v (both viewed in v, deg b >= 1)
inline poly poly_prem(poly a, const poly& b, int v)
{
    int db = b.degree_in(v);
    assert(db >= 1 && b.level() == v);
    poly lb = b.coeff_in(v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        poly la = a.coeff_in(v, da);
        std::vector<poly> sh(da - db, poly(0));
        sh.push_back(la);
        a = lb * a - poly::from_coeffs(v, std::move(sh)) * b;
        assert(a.degree_in(v) < da || a.is_zero());
    }
    return a;
}

poly poly_gcd(const poly& a, const poly& b);

// gcd of the v-coefficients (the content w.r.t. variable v)
inline poly poly_content(const poly& p, int v)
{
    if (p.level() < v)
        return p;
    poly g(0);
    for (auto& c : p.coeffs_in(v)) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero())
            return g;
    }
    return g;
}

// scale so that the recursive leading coefficient is 1
inline poly poly_canon(const poly& p)
{
    if (p.is_zero())
        return p;
    rat lc = p.rec_lc();
    return poly(rat(1) / lc) * p;
}

namespace detail {
inline void rat_content_rec(const poly& p, rat& g)
{
    if (p.is_constant()) {
        if (!p.is_zero()) {
            rat c;
            mpz_gcd(c.get_num().get_mpz_t(), g.get_num().get_mpz_t(),
                    p.constant().get_num().get_mpz_t());
            mpz_lcm(c.get_den().get_mpz_t(), g.get_den().get_mpz_t(),
                    p.constant().get_den().get_mpz_t());
            g = c;
        }
        return;
    }
    for (int j = 0; j <= p.degree(); ++j)
        rat_content_rec(p.coeff_in(p.level(), j), g);
}
} // namespace detail

// positive rational c with p/c integer-coefficient and content-free
inline rat rat_content(const poly& p)
{
    if (p.is_zero())
        return rat(0);
    rat g(0);
    detail::rat_content_rec(p, g);
    if (sgn(p.rec_lc()) < 0)
        g = -g;
    return g;
}

// integer-primitive part with positive recursive leading coefficient
inline poly poly_prim_q(const poly& p)
{
    if (p.is_zero())
        return p;
    return poly(rat(1) / rat_content(p)) * p;
}

inline poly poly_primitive(const poly& p, int v)
{
    if (p.is_zero())
        return p;
    return poly_prim_q(poly_div_exact(p, poly_content(p, v)));
}

inline poly poly_gcd(const poly& a, const poly& b)
{
    if (a.is_zero())
        return poly_canon(b);
    if (b.is_zero())
        return poly_canon(a);
    int v = std::max(a.level(), b.level());
    if (v == 0)
        return poly(1);
    if (a.level() < v)
        return poly_gcd(a, poly_content(b, v));
    if (b.level() < v)
        return poly_gcd(poly_content(a, v), b);
    poly ca = poly_content(a, v), cb = poly_content(b, v);
    poly g = poly_gcd(ca, cb);
    poly A = poly_prim_q(poly_div_exact(a, ca)), B = poly_prim_q(poly_div_exact(b, cb));
    if (A.degree_in(v) < B.degree_in(v))
        std::swap(A, B);
    while (!B.is_zero() && B.level() == v) {
        poly R = poly_prem(A, B, v);
        A = std::move(B);
        B = R.is_zero() ? poly(0) : poly_primitive(R, v);
    }
    if (!B.is_zero()) // remainder dropped to the lower field: coprime in v
        return poly_canon(g);
    return poly_canon(g * poly_primitive(A, v));
}

inline bool poly_coprime(const poly& a, const poly& b)
{
    return poly_gcd(a, b).is_constant();
}

// resultant of p and q w.r.t. variable v, with the orientation
// res(t - a, t - b) = b - a (Sylvester determinant of (q, p)); result is free
// of v
inline poly poly_resultant(const poly& p, const poly& q, int v)
{
    if (p.is_zero() || q.is_zero())
        throw error("poly_resultant: zero input");
    int m = p.degree_in(v), n = q.degree_in(v);
    if (m == 0 && n == 0)
        return poly(1);
    if (n == 0)
        return q.pow(m);
    if (m == 0)
        return p.pow(n);
    std::vector<poly> fc(m + 1, poly(0)), gc(n + 1, poly(0));
    for (int j = 0; j <= m; ++j)
        fc[j] = p.coeff_in(v, j);
    for (int j = 0; j <= n; ++j)
        gc[j] = q.coeff_in(v, j);
    int N = m + n;
    std::vector<std::vector<poly>> M(N, std::vector<poly>(N, poly(0)));
    // Sylvester matrix of (q, p): first m rows from q, last n rows from p
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            M[i][i + j] = gc[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            M[m + i][i + j] = fc[m - j];
    // Bareiss fraction-free elimination
    poly prev(1);
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int sw = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) {
                    sw = i;
                    break;
                }
            if (sw < 0)
                return poly(0);
            std::swap(M[k], M[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = poly_div_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = poly(0);
        }
        prev = M[k][k];
    }
    poly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

} // namespace pisigma

#endif
