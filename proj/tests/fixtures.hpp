#ifndef PISIGMA_TEST_FIXTURES_HPP
#define PISIGMA_TEST_FIXTURES_HPP

// Shared difference fields and operators used across the test suites: the
// harmonic-number field Q(x)(h) and the factorial field Q(x)(p), with the
// order-2 operators they come with.

#include "pisigma/ore.hpp"
#include "pisigma/tower.hpp"

#include <random>

namespace fixtures {

using namespace pisigma;

inline tower harmonic_tower()
{
    tower tw;
    tw.push({"x", monomial_kind::sigma_star, felem(1), felem(1)});
    felem x = felem::variable(1);
    tw.push({"h", monomial_kind::sigma_star, felem(1), (x + felem(1)).inverse()});
    tw.mark_trusted();
    return tw;
}

inline tower factorial_tower()
{
    tower tw;
    tw.push({"x", monomial_kind::sigma_star, felem(1), felem(1)});
    felem x = felem::variable(1);
    tw.push({"p", monomial_kind::pi, x + felem(1), felem(0)});
    tw.mark_trusted();
    return tw;
}

inline poly X() { return poly::variable(1); }
inline poly H() { return poly::variable(2); }
inline poly P() { return poly::variable(2); }

// abar = 1 + h + h x, bbar = 3 + 2h + 2x + 3hx + hx^2
inline poly abar()
{
    return poly(1) + H() + H() * X();
}
inline poly bbar()
{
    return poly(3) + rat(2) * H() + rat(2) * X() + rat(3) * H() * X() + H() * X() * X();
}

// the order-2 operator with coefficients Equ:PCoeffHn
inline ore_op harmonic_operator()
{
    poly x = X(), h = H();
    felem a0 = felem(abar().pow(2) * bbar().pow(2));
    felem a1 = -felem(h * (x + poly(1)) * (rat(2) * x + poly(3)) * bbar().pow(2));
    felem a2 = felem(h * (x + poly(1)).pow(2) * (x + poly(2)).pow(3) * abar());
    return ore_op({a0, a1, a2});
}

// the operator with coefficients Equ:HnCoeff (= L_{abar,1,1/(x+1)})
inline ore_op harmonic_sub_operator()
{
    poly x = X(), h = H();
    felem a0 = felem(abar() * bbar());
    felem a1 = -felem(h * (rat(2) * x + poly(3)) * bbar());
    felem a2 = felem(h * (x + poly(2)).pow(2) * abar());
    return ore_op({a0, a1, a2});
}

// the order-2 factorial operator from Exp:HyperDFn!1
inline ore_op factorial_operator()
{
    poly x = X(), p = P();
    poly c0 = poly(7) + rat(3) * p + rat(6) * x + rat(5) * p * x + x * x + rat(2) * p * x * x;
    poly c1 = poly(16) + rat(7) * p + rat(16) * x + rat(12) * p * x + rat(3) * x * x +
              rat(4) * p * x * x;
    poly c2 = poly(2) + p + rat(4) * x + rat(2) * p * x + x * x;
    felem a0 = -felem(rat(2) * p.pow(2) * (x + poly(1)).pow(2) * (x + poly(2)) * c0);
    felem a1 = felem(p * (x + poly(1)) * (x + poly(2)) * c1);
    felem a2 = -felem(c2);
    return ore_op({a0, a1, a2});
}

// the operator with coefficients Equ:LSubFieldn! (= L_{p,1,2(x+1)^2})
inline ore_op factorial_sub_operator()
{
    poly x = X(), p = P();
    poly c0 = poly(7) + rat(3) * p + rat(6) * x + rat(5) * p * x + x * x + rat(2) * p * x * x;
    poly c1 = poly(16) + rat(7) * p + rat(16) * x + rat(12) * p * x + rat(3) * x * x +
              rat(4) * p * x * x;
    poly c2 = poly(2) + p + rat(4) * x + rat(2) * p * x + x * x;
    felem a0 = -felem(c0);
    felem a1 = felem((x + poly(1)) * c1);
    felem a2 = -felem(rat(2) * (x + poly(1)) * (x + poly(2)) * c2);
    return ore_op({a0, a1, a2});
}

// Equ:tildeai, the cleared coefficients after dividing by the denominator p
inline ore_op factorial_tilde_operator()
{
    poly x = X(), p = P();
    poly c0 = poly(7) + rat(3) * p + rat(6) * x + rat(5) * p * x + x * x + rat(2) * p * x * x;
    poly c1 = poly(16) + rat(7) * p + rat(16) * x + rat(12) * p * x + rat(3) * x * x +
              rat(4) * p * x * x;
    poly c2 = poly(2) + p + rat(4) * x + rat(2) * p * x + x * x;
    return ore_op({-felem(c0), felem(c1), -felem(rat(2) * c2)});
}

// r_j = (1+h+hx)/(x+1) * sigma(h^j)/h^j of Equ:rj
inline felem harmonic_rj(const tower& tw, int j)
{
    felem h = felem::variable(2), x = felem::variable(1);
    felem u = (felem(1) + h + h * x) / (x + felem(1));
    felem hj = h.pow(j);
    return u * tw.sigma(hj) / hj;
}

inline felem random_felem(std::mt19937_64& rng, int level, int deg, int csize)
{
    auto rnd_poly = [&](auto&& self, int lv, int d) -> poly {
        if (lv == 0)
            return poly(rat_of((long)(rng() % (2 * csize + 1)) - csize));
        std::vector<poly> cs;
        for (int j = 0; j <= d; ++j)
            cs.push_back(self(self, lv - 1, d));
        return poly::from_coeffs(lv, std::move(cs));
    };
    poly num = rnd_poly(rnd_poly, level, deg);
    poly den = rnd_poly(rnd_poly, level, deg);
    while (den.is_zero())
        den = rnd_poly(rnd_poly, level, deg);
    return felem(num, den);
}

inline felem random_nonzero_felem(std::mt19937_64& rng, int level, int deg, int csize)
{
    felem f = random_felem(rng, level, deg, csize);
    while (f.is_zero())
        f = random_felem(rng, level, deg, csize);
    return f;
}

} // namespace fixtures

#endif
