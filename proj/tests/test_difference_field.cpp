#include "doctest.h"

#include "pisigma/ore.hpp"
#include "pisigma/tower.hpp"

#include <random>

using namespace pisigma;

namespace {

tower harmonic_tower()
{
    tower tw;
    tw.push({"x", monomial_kind::sigma_star, felem(1), felem(1)});
    felem x = felem::variable(1);
    tw.push({"h", monomial_kind::sigma_star, felem(1), (x + felem(1)).inverse()});
    return tw;
}

tower factorial_tower()
{
    tower tw;
    tw.push({"x", monomial_kind::sigma_star, felem(1), felem(1)});
    felem x = felem::variable(1);
    tw.push({"p", monomial_kind::pi, x + felem(1), felem(0)});
    return tw;
}

felem random_felem(std::mt19937_64& rng, int level, int deg, int csize)
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

} // namespace

TEST_CASE("sigma on the harmonic tower")
{
    tower tw = harmonic_tower();
    felem x = felem::variable(1), h = felem::variable(2);

    // sigma(h) = (1 + h + h x)/(1 + x)
    felem sh = tw.sigma(h);
    felem expect = (felem(1) + h + h * x) / (felem(1) + x);
    CHECK(sh == expect);

    // sigma^2(h) = (3 + 2h + 2x + 3hx + hx^2)/((1+x)(2+x))
    felem s2h = tw.sigma(h, 2);
    felem expect2 = (felem(3) + rat(2) * h + rat(2) * x + rat(3) * h * x + h * x * x) /
                    ((felem(1) + x) * (felem(2) + x));
    CHECK(s2h == expect2);
}

TEST_CASE("sigma is an automorphism; inverse and composition laws")
{
    tower tw = harmonic_tower();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        felem f = random_felem(rng, 2, 2, 4);
        if (f.is_zero())
            continue;
        felem g = random_felem(rng, 2, 2, 4);
        CHECK(tw.sigma(tw.sigma(f), -1) == f);
        CHECK(tw.sigma(tw.sigma(f, -2), 2) == f);
        for (long n : {-2L, 1L, 3L}) {
            CHECK(tw.sigma(f + g, n) == tw.sigma(f, n) + tw.sigma(g, n));
            CHECK(tw.sigma(f * g, n) == tw.sigma(f, n) * tw.sigma(g, n));
        }
        for (long m : {-1L, 2L})
            for (long n : {-2L, 3L})
                CHECK(tw.sigma(tw.sigma(f, m), n) == tw.sigma(f, m + n));
    }
    CHECK(tw.sigma(felem(rat_of(7, 3)), 5) == felem(rat_of(7, 3)));
}

TEST_CASE("sigma factorial notations and their identities")
{
    tower tw = harmonic_tower();
    felem x = felem::variable(1);

    // (x+1)^{(3)}_sigma = (x+1)(x+2)(x+3)
    felem f = x + felem(1);
    CHECK(sigma_factorial(tw, f, 3) == f * (x + felem(2)) * (x + felem(3)));

    // 1^{(n)} = 1, boundary values
    CHECK(sigma_factorial(tw, felem(1), 7) == felem(1));
    CHECK(sigma_factorial(tw, f, 0) == felem(1));
    CHECK(sigma_sum(tw, f, 0) == felem(0));
    CHECK(sigma_factorial2(tw, f, 0) == felem(1));
    CHECK(sigma_factorial2(tw, f, 1) == felem(1));

    std::mt19937_64 rng(17);
    for (int it = 0; it < 6; ++it) {
        felem a = random_felem(rng, 2, 1, 3);
        if (a.is_zero())
            continue;
        // (sigma a / a)^{(n)} = sigma^n a / a
        for (long n : {1L, 3L, 5L}) {
            felem q = tw.sigma(a) / a;
            CHECK(sigma_factorial(tw, q, n) == tw.sigma(a, n) / a);
        }
        // (sigma^i a)^{(n-i)} = a^{(n)} / a^{(i)}
        for (long n = 0; n <= 5; ++n)
            for (long i = 0; i <= n; ++i)
                CHECK(sigma_factorial(tw, tw.sigma(a, i), n - i) ==
                      sigma_factorial(tw, a, n) / sigma_factorial(tw, a, i));
        // (a^{(i)})^{sigma, n-i} = a^{(n)}_{ss} / (a^{(i)}_{ss} a^{(n-i)}_{ss}),
        // where x^{sigma, m} is the m-fold product prod_{j<m} sigma^j(x)
        for (long n = 0; n <= 4; ++n)
            for (long i = 0; i <= n; ++i)
                CHECK(sigma_factorial(tw, sigma_factorial(tw, a, i), n - i) ==
                      sigma_factorial2(tw, a, n) /
                          (sigma_factorial2(tw, a, i) * sigma_factorial2(tw, a, n - i)));
    }
}

TEST_CASE("lemma lm:lctc degree and leading coefficient laws")
{
    tower fact = factorial_tower();
    felem alpha = felem::variable(1) + felem(1); // sigma(p) = (x+1) p
    std::mt19937_64 rng(23);
    for (int it = 0; it < 6; ++it) {
        // random polynomial in p over Q(x)
        int d = 1 + (int)(rng() % 3);
        upoly P(2);
        for (int j = 0; j <= d; ++j)
            P.c.push_back(random_felem(rng, 1, 2, 3));
        P.trim();
        if (P.degree() < 1)
            continue;
        d = P.degree();
        for (long n : {1L, 2L, 3L}) {
            upoly sp = upoly_sigma(fact, P, n);
            CHECK(sp.degree() == d);
            felem expect_lc =
                fact.sigma(P.lc(), n) * sigma_factorial(fact, alpha.pow(d), n);
            CHECK(sp.lc() == expect_lc);
        }
    }
}

TEST_CASE("eta partial sums")
{
    tower tw = harmonic_tower();
    // x with beta = 1: eta_j = j
    CHECK(eta_partial_sum(tw, 1, 5) == felem(5));
    CHECK(eta_partial_sum(tw, 1, 0) == felem(0));
    // h with beta = 1/(x+1): eta_2 = 1/(x+1) + 1/(x+2)
    felem x = felem::variable(1);
    felem expect = (x + felem(1)).inverse() + (x + felem(2)).inverse();
    CHECK(eta_partial_sum(tw, 2, 2) == expect);
    CHECK(eta_partial_sum(tw, 2, 0) == felem(0));
    // sigma^j(t) = t + eta_j
    felem h = felem::variable(2);
    CHECK(tw.sigma(h, 4) == h + eta_partial_sum(tw, 2, 4));

    tower fact = factorial_tower();
    CHECK_THROWS(eta_partial_sum(fact, 2, 1));
}
