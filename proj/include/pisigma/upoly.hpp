#ifndef PISIGMA_UPOLY_HPP
#define PISIGMA_UPOLY_HPP

// Dense univariate polynomials in one tower variable with coefficients from
// the fraction field below it: the k[t] view used by the solvers. Zero is the
// empty coefficient vector; degree(0) = -1.

#include "pisigma/tower.hpp"

namespace pisigma {

struct upoly {
    int var = 0;
    std::vector<felem> c;

    upoly() = default;
    explicit upoly(int v) : var(v) {}
    upoly(int v, std::vector<felem> cs) : var(v), c(std::move(cs)) { trim(); }

    static upoly zero(int v) { return upoly(v); }
    static upoly constant(int v, felem x)
    {
        upoly p(v);
        if (!x.is_zero())
            p.c = {std::move(x)};
        return p;
    }
    static upoly monomial(int v, felem x, int d)
    {
        upoly p(v);
        if (!x.is_zero()) {
            p.c.assign(d + 1, felem(0));
            p.c[d] = std::move(x);
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const felem& lc() const { return c.back(); }
    felem coeff(int j) const { return j >= 0 && j < (int)c.size() ? c[j] : felem(0); }

    void trim()
    {
        while (!c.empty() && c.back().is_zero())
            c.pop_back();
    }

    friend bool operator==(const upoly& a, const upoly& b) { return a.c == b.c; }
    friend bool operator!=(const upoly& a, const upoly& b) { return !(a == b); }

    friend upoly operator-(const upoly& a)
    {
        upoly r = a;
        for (auto& x : r.c)
            x = -x;
        return r;
    }

    friend upoly operator+(const upoly& a, const upoly& b)
    {
        upoly r = a;
        if (r.c.size() < b.c.size())
            r.c.resize(b.c.size(), felem(0));
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend upoly operator-(const upoly& a, const upoly& b) { return a + (-b); }

    friend upoly operator*(const upoly& a, const upoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return upoly(a.var ? a.var : b.var);
        upoly r(a.var);
        r.c.assign(a.c.size() + b.c.size() - 1, felem(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero())
                continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (!b.c[j].is_zero())
                    r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    friend upoly operator*(const felem& s, const upoly& a)
    {
        upoly r = a;
        for (auto& x : r.c)
            x = s * x;
        r.trim();
        return r;
    }

    upoly monic() const
    {
        if (is_zero())
            return *this;
        return lc().inverse() * *this;
    }

    felem eval(const felem& x) const
    {
        felem acc;
        for (size_t i = c.size(); i-- > 0;)
            acc = acc * x + c[i];
        return acc;
    }

    felem to_felem() const
    {
        felem t = felem::variable(var), acc;
        for (size_t i = c.size(); i-- > 0;)
            acc = acc * t + c[i];
        return acc;
    }

    std::string str(const std::vector<std::string>& names = {}) const
    {
        return to_felem().str(names);
    }
};

inline std::pair<upoly, upoly> upoly_divrem(const upoly& a, const upoly& b)
{
    if (b.is_zero())
        throw error("division by zero");
    upoly q(a.var), r = a;
    q.c.assign(std::max<int>(0, a.degree() - b.degree() + 1), felem(0));
    felem li = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int sh = r.degree() - b.degree();
        felem f = r.lc() * li;
        q.c[sh] = f;
        for (int j = 0; j <= b.degree(); ++j)
            r.c[sh + j] = r.c[sh + j] - f * b.c[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline upoly upoly_mod(const upoly& a, const upoly& b) { return upoly_divrem(a, b).second; }
inline upoly upoly_div(const upoly& a, const upoly& b)
{
    auto [q, r] = upoly_divrem(a, b);
    if (!r.is_zero())
        throw error("upoly_div: not divisible");
    return q;
}

inline upoly upoly_gcd(upoly a, upoly b)
{
    while (!b.is_zero()) {
        upoly r = upoly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = gcd(a,b) monic with s*a + t*b = g
inline std::tuple<upoly, upoly, upoly> upoly_xgcd(const upoly& a, const upoly& b)
{
    upoly r0 = a, r1 = b;
    upoly s0 = upoly::constant(a.var, felem(1)), s1 = upoly::zero(a.var);
    upoly t0 = upoly::zero(a.var), t1 = upoly::constant(a.var, felem(1));
    while (!r1.is_zero()) {
        auto [q, r] = upoly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        upoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    felem li = r0.lc().inverse();
    return {li * r0, li * s0, li * t0};
}

inline upoly upoly_derivative(const upoly& a)
{
    upoly r(a.var);
    for (int j = 1; j <= a.degree(); ++j)
        r.c.push_back(rat(j) * a.c[j]);
    r.trim();
    return r;
}

// ---- conversions ----

// view a field element as a polynomial in variable v; requires the
// denominator to be free of v
inline upoly upoly_of(const felem& f, int v)
{
    if (f.den().degree_in(v) > 0)
        throw error("clear denominators first");
    if (f.num().level() > v || f.den().level() > v)
        throw error("upoly_of: element lives above v");
    felem dinv = felem(f.den()).inverse();
    upoly p(v);
    for (auto& cj : f.num().coeffs_in(v))
        p.c.push_back(felem(cj) * dinv);
    p.trim();
    return p;
}

// (numerator, denominator) as polynomials in v
inline std::pair<upoly, upoly> upoly_numden(const felem& f, int v)
{
    if (f.num().level() > v || f.den().level() > v)
        throw error("upoly_numden: element lives above v");
    upoly n(v), d(v);
    for (auto& cj : f.num().coeffs_in(v))
        n.c.push_back(felem(cj));
    for (auto& cj : f.den().coeffs_in(v))
        d.c.push_back(felem(cj));
    n.trim();
    d.trim();
    return {n, d};
}

// sigma^n of a polynomial in v: coefficients map through sigma, the variable
// through its degree-1 image
inline upoly upoly_sigma(const tower& tw, const upoly& p, long n)
{
    if (p.is_zero() || n == 0)
        return p;
    felem img = tw.sigma_var(p.var, n);
    auto [in_, id_] = upoly_numden(img, p.var);
    if (in_.degree() != 1)
        throw error("upoly_sigma: variable image is not degree 1");
    if (id_.degree() != 0)
        throw error("upoly_sigma: variable image has a pole in the variable");
    upoly timg = id_.c[0].inverse() * in_;
    upoly acc(p.var);
    for (size_t i = p.c.size(); i-- > 0;)
        acc = acc * timg + upoly::constant(p.var, tw.sigma(p.c[i], n));
    return acc;
}

} // namespace pisigma

#endif
