#ifndef PISIGMA_ORE_HPP
#define PISIGMA_ORE_HPP

// The skew polynomial ring k[E; sigma] with E*h = sigma(h)*E: application,
// noncommutative multiplication, right division, the Riccati residual test,
// t-power projection and denominator clearing.

#include "pisigma/upoly.hpp"

#include <map>

namespace pisigma {

struct ore_op {
    std::vector<felem> a; // ascending powers of E; zero operator is empty

    ore_op() = default;
    explicit ore_op(std::vector<felem> cs) : a(std::move(cs)) { trim(); }

    static ore_op from_terms(std::initializer_list<felem> cs)
    {
        return ore_op(std::vector<felem>(cs));
    }

    bool is_zero() const { return a.empty(); }
    int order() const { return (int)a.size() - 1; } // deg(L); -1 for zero
    int trailing() const                            // nu(L)
    {
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero())
                return (int)i;
        return -1;
    }
    felem coeff(int i) const { return i >= 0 && i < (int)a.size() ? a[i] : felem(0); }

    void trim()
    {
        while (!a.empty() && a.back().is_zero())
            a.pop_back();
    }

    friend bool operator==(const ore_op& x, const ore_op& y) { return x.a == y.a; }

    friend ore_op operator+(const ore_op& x, const ore_op& y)
    {
        ore_op r = x;
        if (r.a.size() < y.a.size())
            r.a.resize(y.a.size(), felem(0));
        for (size_t i = 0; i < y.a.size(); ++i)
            r.a[i] = r.a[i] + y.a[i];
        r.trim();
        return r;
    }
    friend ore_op operator-(const ore_op& x, const ore_op& y)
    {
        ore_op r = x;
        if (r.a.size() < y.a.size())
            r.a.resize(y.a.size(), felem(0));
        for (size_t i = 0; i < y.a.size(); ++i)
            r.a[i] = r.a[i] - y.a[i];
        r.trim();
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + a[i].str(names) + ")*E^" + std::to_string(i);
        }
        return s;
    }
};

// L(f) = sum a_i sigma^i(f)
inline felem ore_apply(const tower& tw, const ore_op& L, const felem& f)
{
    felem r(0);
    felem img = f;
    for (size_t i = 0; i < L.a.size(); ++i) {
        if (!L.a[i].is_zero())
            r = r + L.a[i] * img;
        if (i + 1 < L.a.size())
            img = tw.sigma(img);
    }
    return r;
}

// (sum a_i E^i)(sum b_j E^j) = sum_i sum_j a_i sigma^i(b_j) E^(i+j)
inline ore_op ore_mul(const tower& tw, const ore_op& L1, const ore_op& L2)
{
    if (L1.is_zero() || L2.is_zero())
        return ore_op();
    ore_op r;
    r.a.assign(L1.a.size() + L2.a.size() - 1, felem(0));
    std::vector<felem> shifted = L2.a;
    for (size_t i = 0; i < L1.a.size(); ++i) {
        if (!L1.a[i].is_zero())
            for (size_t j = 0; j < shifted.size(); ++j)
                if (!shifted[j].is_zero())
                    r.a[i + j] = r.a[i + j] + L1.a[i] * shifted[j];
        if (i + 1 < L1.a.size())
            for (auto& b : shifted)
                b = tw.sigma(b);
    }
    r.trim();
    return r;
}

// L = Q*M + R with deg R < deg M
inline std::pair<ore_op, ore_op> ore_right_divide(const tower& tw, const ore_op& L,
                                                  const ore_op& M)
{
    if (M.is_zero())
        throw error("division by zero");
    ore_op q, r = L;
    q.a.assign(std::max<int>(0, L.order() - M.order() + 1), felem(0));
    while (!r.is_zero() && r.order() >= M.order()) {
        int sh = r.order() - M.order();
        // factor f with f * sigma^sh(lc(M)) = lc(r)
        felem f = r.a.back() / tw.sigma(M.a.back(), sh);
        q.a[sh] = q.a[sh] + f;
        ore_op term;
        term.a.assign(sh + 1, felem(0));
        term.a[sh] = f;
        r = r - ore_mul(tw, term, M);
    }
    q.trim();
    return {q, r};
}

// sum_i a_i r^{(i)}_sigma; zero iff E - r is a right factor of L
inline felem riccati_residual(const tower& tw, const ore_op& L, const felem& r)
{
    if (r.is_zero())
        throw error("riccati_residual: r must be nonzero");
    felem res(0), fact(1), cur = r;
    for (size_t i = 0; i < L.a.size(); ++i) {
        if (!L.a[i].is_zero())
            res = res + L.a[i] * fact;
        fact = fact * cur;
        cur = tw.sigma(cur);
    }
    return res;
}

// clear denominators (left-multiply by the common denominator) and remove
// the common polynomial content of the coefficient tuple
inline ore_op ore_clear_denominators(const ore_op& L, int v)
{
    if (L.is_zero())
        return L;
    poly den(1);
    for (auto& c : L.a)
        if (!c.is_zero())
            den = poly_div_exact(den * c.den(), poly_gcd(den, c.den()));
    std::vector<felem> cs;
    for (auto& c : L.a)
        cs.push_back(c * felem(den));
    poly content(0);
    rat rcont(0);
    for (auto& c : cs) {
        if (c.is_zero())
            continue;
        assert(c.is_poly());
        content = poly_gcd(content, c.num());
        rat rc = abs(rat_content(c.num()));
        if (is_zero(rcont))
            rcont = rc;
        else {
            rat t;
            mpz_gcd(t.get_num().get_mpz_t(), rcont.get_num().get_mpz_t(),
                    rc.get_num().get_mpz_t());
            mpz_lcm(t.get_den().get_mpz_t(), rcont.get_den().get_mpz_t(),
                    rc.get_den().get_mpz_t());
            rcont = t;
        }
    }
    poly full = poly(rcont) * content;
    ore_op out;
    for (auto& c : cs)
        out.a.push_back(c.is_zero() ? felem(0) : felem(poly_div_exact(c.num(), full)));
    out.trim();
    (void)v;
    return out;
}

// t-power projection L = sum_j t^j L_j for operators with coefficients
// polynomial in variable v; components are free of v
struct t_projection {
    int var;
    std::map<int, ore_op> comp; // j -> L_j, nonzero components only

    int min_power() const { return comp.empty() ? 0 : comp.begin()->first; }
    int max_power() const { return comp.empty() ? 0 : comp.rbegin()->first; }
};

inline t_projection project_components(const ore_op& L, int v)
{
    t_projection out;
    out.var = v;
    for (size_t i = 0; i < L.a.size(); ++i) {
        if (L.a[i].is_zero())
            continue;
        upoly c = upoly_of(L.a[i], v); // throws "clear denominators first" on poles in v
        for (int j = 0; j <= c.degree(); ++j) {
            if (c.coeff(j).is_zero())
                continue;
            ore_op& comp = out.comp[j];
            if (comp.a.size() < i + 1)
                comp.a.resize(i + 1, felem(0));
            comp.a[i] = c.coeff(j);
        }
    }
    for (auto& [j, comp] : out.comp)
        comp.trim();
    return out;
}

// reassemble sum_j t^j L_j
inline ore_op project_reassemble(const t_projection& p)
{
    ore_op r;
    felem t = felem::variable(p.var);
    for (auto& [j, comp] : p.comp) {
        felem tj = t.pow(j);
        ore_op term = comp;
        for (auto& c : term.a)
            c = tj * c;
        r = r + term;
    }
    return r;
}

// divide out E^nu when trailing coefficients vanish; returns (stripped, nu)
inline std::pair<ore_op, int> ore_strip_trailing(const ore_op& L)
{
    int nu = L.trailing();
    if (nu <= 0)
        return {L, 0};
    ore_op r;
    r.a.assign(L.a.begin() + nu, L.a.end());
    return {r, nu};
}

} // namespace pisigma

#endif
