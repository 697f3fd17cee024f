#ifndef PISIGMA_FACTOR_HPP
#define PISIGMA_FACTOR_HPP

// Polynomial factorization over the tower fields:
//   * univariate over Q: squarefree split, Cantor-Zassenhaus mod p, linear
//     multi-factor Hensel lifting, subset recombination;
//   * k[t] over a tower field: content/primitive split, Yun, evaluation of
//     the lower variables at integer points, monic transform, ideal-adic
//     multivariate lifting, recombination, with a retry loop on unlucky
//     points.
// Also: integer/rational roots, squarefree decomposition, divisor
// enumeration.

#include "pisigma/field_elem.hpp"

#include <map>
#include <random>
#include <set>

namespace pisigma {

struct factor_pair {
    poly f;   // canonical (primitive, recursively monic), degree >= 1 in var
    int mult; // >= 1
};

struct factorization {
    int var = 0;
    felem unit; // element of the field below var
    std::vector<factor_pair> factors;

    felem assemble() const
    {
        felem r = unit;
        for (auto& [f, m] : factors)
            r = r * felem(f).pow(m);
        return r;
    }
};

// ---------------------------------------------------------------- mod p ----

namespace fp {

using pvec = std::vector<uint64_t>; // dense, trailing coefficient nonzero

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p)
{
    return (uint64_t)((unsigned __int128)a * b % p);
}

inline uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p)
{
    uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u(a % p, p - 2, p); }

inline void trim(pvec& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline pvec mul(const pvec& a, const pvec& b, uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    pvec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (unsigned __int128)a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

inline pvec sub(pvec a, const pvec& b, uint64_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// remainder of a by monic-normalizable b
inline pvec mod(pvec a, const pvec& b, uint64_t p)
{
    uint64_t li = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t f = mulmod(a.back(), li, p);
        size_t sh = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[sh + j] = (a[sh + j] + p - mulmod(f, b[j], p)) % p;
        trim(a);
        if (a.size() < b.size())
            break;
    }
    return a;
}

inline pvec divexact(const pvec& a, const pvec& b, uint64_t p)
{
    pvec r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint64_t li = invmod(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        uint64_t f = mulmod(r.back(), li, p);
        size_t sh = r.size() - b.size();
        q[sh] = f;
        for (size_t j = 0; j < b.size(); ++j)
            r[sh + j] = (r[sh + j] + p - mulmod(f, b[j], p)) % p;
        trim(r);
    }
    trim(q);
    return q;
}

inline pvec gcd(pvec a, pvec b, uint64_t p)
{
    while (!b.empty()) {
        pvec r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t li = invmod(a.back(), p);
        for (auto& x : a)
            x = mulmod(x, li, p);
    }
    return a;
}

inline pvec derivative(const pvec& a, uint64_t p)
{
    pvec r;
    for (size_t j = 1; j < a.size(); ++j)
        r.push_back(mulmod(a[j], j % p, p));
    trim(r);
    return r;
}

inline pvec powmod_poly(pvec base, bigint e, const pvec& m, uint64_t p)
{
    pvec r = {1};
    base = mod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = mod(mul(r, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// equal-degree splitting of a monic squarefree product of degree-d
// irreducibles
inline void equal_degree(const pvec& u, int d, uint64_t p, std::mt19937_64& rng,
                         std::vector<pvec>& out)
{
    int n = (int)u.size() - 1;
    if (n == d) {
        out.push_back(u);
        return;
    }
    bigint pd(1);
    for (int i = 0; i < d; ++i)
        pd *= bigint((unsigned long)p);
    bigint ex = (pd - 1) / 2;
    while (true) {
        pvec a(n, 0);
        for (auto& x : a)
            x = rng() % p;
        trim(a);
        if (a.size() <= 1)
            continue;
        pvec g = gcd(u, a, p);
        if (g.size() > 1 && g.size() <= u.size() - 1) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divexact(u, g, p), d, p, rng, out);
            return;
        }
        pvec b = powmod_poly(a, ex, u, p);
        if (b.empty())
            continue;
        b[0] = (b[0] + p - 1) % p;
        trim(b);
        g = gcd(u, b, p);
        if (g.size() > 1 && g.size() < u.size()) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divexact(u, g, p), d, p, rng, out);
            return;
        }
    }
}

// monic squarefree factorization mod p
inline std::vector<pvec> factor_sqfree_modp(pvec f, uint64_t p, std::mt19937_64& rng)
{
    uint64_t li = invmod(f.back(), p);
    for (auto& x : f)
        x = mulmod(x, li, p);
    std::vector<pvec> out;
    pvec x = {0, 1};
    pvec h = x; // x^(p^d) mod f, iterated
    pvec r = f;
    int d = 0;
    while ((int)r.size() - 1 > 0) {
        ++d;
        if (2 * d > (int)r.size() - 1) {
            out.push_back(r);
            break;
        }
        h = powmod_poly(h, bigint(p), r, p);
        pvec hx = sub(h, x, p);
        pvec g = gcd(r, hx, p);
        if (g.size() > 1) {
            equal_degree(g, d, p, rng, out);
            r = divexact(r, g, p);
            h = mod(h, r, p);
        }
    }
    return out;
}

} // namespace fp

namespace zx {

// dense Z[t] as vector<bigint>, trailing coefficient nonzero

using zpoly = std::vector<bigint>;

inline void trim(zpoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline zpoly mul(const zpoly& a, const zpoly& b)
{
    if (a.empty() || b.empty())
        return {};
    zpoly r(a.size() + b.size() - 1, bigint(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline zpoly sub(zpoly a, const zpoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), bigint(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline bigint content(const zpoly& a)
{
    bigint g(0);
    for (auto& x : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// exact division test; returns quotient if b | a in Z[t]
inline std::optional<zpoly> divexact(const zpoly& a, const zpoly& b)
{
    if (b.empty())
        return std::nullopt;
    zpoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, bigint(0));
    while (!r.empty() && r.size() >= b.size()) {
        bigint rem;
        bigint f;
        mpz_fdiv_qr(f.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0)
            return std::nullopt;
        size_t sh = r.size() - b.size();
        q[sh] = f;
        for (size_t j = 0; j < b.size(); ++j)
            r[sh + j] -= f * b[j];
        trim(r);
        if (!r.empty() && r.size() >= b.size() && r.size() - b.size() == sh)
            return std::nullopt; // no degree drop: not divisible
    }
    if (!r.empty())
        return std::nullopt;
    trim(q);
    return q;
}

inline zpoly modsym(const zpoly& a, const bigint& m)
{
    zpoly r = a;
    bigint half = m / 2;
    for (auto& x : r) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half)
            x -= m;
    }
    trim(r);
    return r;
}

inline fp::pvec to_modp(const zpoly& a, uint64_t p)
{
    fp::pvec r;
    bigint t;
    for (auto& x : a) {
        mpz_fdiv_r_ui(t.get_mpz_t(), x.get_mpz_t(), p);
        r.push_back(t.get_ui());
    }
    fp::trim(r);
    return r;
}

} // namespace zx

// ------------------------------------------------- univariate over Q ----

namespace detail_factor {

// multi-factor linear Hensel lifting of a monic f in Z[t] from its monic
// mod-p factorization to mod p^K
inline std::vector<zx::zpoly> hensel_lift(const zx::zpoly& f,
                                          const std::vector<fp::pvec>& seeds,
                                          uint64_t p, int K)
{
    size_t r = seeds.size();
    // Bezout diagonal: cof_i * prod_{l != i} seed_l == 1 mod seed_i (mod p)
    std::vector<fp::pvec> cof(r);
    for (size_t i = 0; i < r; ++i) {
        fp::pvec prod = {1};
        for (size_t l = 0; l < r; ++l)
            if (l != i)
                prod = fp::mod(fp::mul(prod, seeds[l], p), seeds[i], p);
        // invert prod mod seed_i via Fermat in the quotient ring: use xgcd
        // style inversion through powmod of the multiplicative structure is
        // unavailable; do extended Euclid mod p instead
        fp::pvec r0 = seeds[i], r1 = prod;
        fp::pvec t0 = {}, t1 = {1};
        while (!r1.empty()) {
            // q, rem of r0 by r1
            fp::pvec q;
            {
                fp::pvec a = r0;
                uint64_t li = fp::invmod(r1.back(), p);
                q.assign(a.size() >= r1.size() ? a.size() - r1.size() + 1 : 0, 0);
                while (a.size() >= r1.size() && !a.empty()) {
                    uint64_t fc = fp::mulmod(a.back(), li, p);
                    size_t sh = a.size() - r1.size();
                    q[sh] = fc;
                    for (size_t j = 0; j < r1.size(); ++j)
                        a[sh + j] = (a[sh + j] + p - fp::mulmod(fc, r1[j], p)) % p;
                    fp::trim(a);
                }
                fp::trim(q);
                r0 = r1;
                r1 = a;
            }
            fp::pvec t2 = fp::sub(t0, fp::mul(q, t1, p), p);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd (a unit, seeds coprime); normalize
        uint64_t li = fp::invmod(r0.empty() ? 1 : r0.back(), p);
        for (auto& x : t0)
            x = fp::mulmod(x, li, p);
        cof[i] = fp::mod(t0, seeds[i], p);
    }

    std::vector<zx::zpoly> F(r);
    for (size_t i = 0; i < r; ++i) {
        F[i].clear();
        for (auto x : seeds[i])
            F[i].push_back(x > p / 2 ? bigint((unsigned long)x) - bigint((unsigned long)p)
                                     : bigint((unsigned long)x));
    }
    bigint q(p);
    for (int k = 1; k < K; ++k) {
        // err = (f - prod F) / p^k mod p
        zx::zpoly prod = {bigint(1)};
        for (auto& Fi : F)
            prod = zx::mul(prod, Fi);
        zx::zpoly err = zx::sub(f, prod);
        for (auto& x : err) {
            assert(x % q == 0);
            x /= q;
        }
        fp::pvec e = zx::to_modp(err, p);
        if (!e.empty()) {
            for (size_t i = 0; i < r; ++i) {
                fp::pvec d = fp::mod(fp::mul(cof[i], e, p), seeds[i], p);
                // F_i += q * sym(d)
                for (size_t j = 0; j < d.size(); ++j) {
                    bigint dj = d[j] > p / 2
                                    ? bigint((unsigned long)d[j]) - bigint((unsigned long)p)
                                    : bigint((unsigned long)d[j]);
                    if (j >= F[i].size())
                        F[i].resize(j + 1, bigint(0));
                    F[i][j] += q * dj;
                }
                zx::trim(F[i]);
            }
        }
        q *= p;
    }
    // reduce symmetrically mod p^K
    for (auto& Fi : F)
        Fi = zx::modsym(Fi, q);
    return F;
}

// factor a primitive squarefree f in Z[t], deg >= 1, into irreducible
// primitive factors with positive leading coefficient (up to sign)
inline std::vector<zx::zpoly> factor_sqfree_z(const zx::zpoly& f, std::mt19937_64& rng)
{
    int d = (int)f.size() - 1;
    if (d == 1)
        return {f};
    // monic transform: fh(y) = lc^(d-1) f(y/lc)
    bigint lc = f.back();
    zx::zpoly fh(f.size());
    bigint pw(1);
    for (int j = d; j >= 0; --j) {
        fh[j] = f[j] * pw;
        if (j > 0)
            pw *= lc;
    }
    // pick a prime keeping fh squarefree
    uint64_t p = 0;
    std::vector<fp::pvec> seeds;
    for (int tries = 0; tries < 200; ++tries) {
        uint64_t cand = 1000000007ULL + 2 * (rng() % 100000000ULL) + (tries * 2ULL);
        bigint bc((unsigned long)cand);
        if (mpz_probab_prime_p(bc.get_mpz_t(), 25) == 0)
            continue;
        fp::pvec fm = zx::to_modp(fh, cand);
        if ((int)fm.size() - 1 != d)
            continue;
        fp::pvec g = fp::gcd(fm, fp::derivative(fm, cand), cand);
        if (g.size() != 1)
            continue;
        p = cand;
        seeds = fp::factor_sqfree_modp(fm, p, rng);
        break;
    }
    if (p == 0)
        throw error("factorization incomplete");
    if (seeds.size() == 1)
        return {f};
    // Mignotte-style bound for monic fh, then lift
    bigint norm2(0);
    for (auto& x : fh)
        norm2 += x * x;
    bigint bound = sqrt(norm2) + 1;
    bound <<= (unsigned)(d + 1);
    int K = 1;
    bigint pk(p);
    while (pk <= 2 * bound) {
        pk *= p;
        ++K;
    }
    std::vector<zx::zpoly> lifted = hensel_lift(fh, seeds, p, K);

    // subset recombination on the monic fh
    auto next_combination = [](std::vector<size_t>& idx, size_t n) {
        size_t k = idx.size();
        for (size_t i = k; i-- > 0;) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    std::vector<zx::zpoly> out_monic;
    zx::zpoly rem = fh;
    std::vector<size_t> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i)
        alive[i] = i;
    bool progress = true;
    while (progress && !alive.empty()) {
        progress = false;
        size_t n = alive.size();
        for (size_t card = 1; 2 * card <= n && !progress; ++card) {
            std::vector<size_t> idx(card);
            for (size_t i = 0; i < card; ++i)
                idx[i] = i;
            do {
                zx::zpoly cand = {bigint(1)};
                for (size_t i : idx)
                    cand = zx::modsym(zx::mul(cand, lifted[alive[i]]), pk);
                auto quo = zx::divexact(rem, cand);
                if (quo) {
                    out_monic.push_back(cand);
                    rem = *quo;
                    std::vector<size_t> na;
                    for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                        if (j < idx.size() && idx[j] == i)
                            ++j;
                        else
                            na.push_back(alive[i]);
                    }
                    alive = std::move(na);
                    progress = true;
                    break;
                }
            } while (next_combination(idx, n));
        }
    }
    if ((int)rem.size() - 1 > 0)
        out_monic.push_back(rem);
    // undo the monic transform: g(t) = primitive(h(lc * t))
    std::vector<zx::zpoly> out;
    for (auto& h : out_monic) {
        zx::zpoly g(h.size());
        bigint s(1);
        for (size_t j = 0; j < h.size(); ++j) {
            g[j] = h[j] * s;
            s *= lc;
        }
        bigint c = zx::content(g);
        for (auto& x : g)
            x /= c;
        if (g.back() < 0)
            for (auto& x : g)
                x = -x;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace detail_factor

// ---- conversions for univariate-over-Q views ----

inline std::vector<rat> rat_coeffs(const poly& p, int v)
{
    if (p.level() > v)
        throw error("rat_coeffs: not univariate in v");
    std::vector<rat> cs;
    for (auto& c : p.coeffs_in(v)) {
        if (!c.is_constant())
            throw error("rat_coeffs: coefficients are not rational");
        cs.push_back(c.constant());
    }
    return cs;
}

inline poly poly_from_rat_coeffs(int v, const std::vector<rat>& cs)
{
    std::vector<poly> ps;
    ps.reserve(cs.size());
    for (auto& c : cs)
        ps.emplace_back(c);
    return poly::from_coeffs(v, std::move(ps));
}

inline poly poly_from_zpoly(int v, const zx::zpoly& f)
{
    std::vector<poly> ps;
    ps.reserve(f.size());
    for (auto& c : f)
        ps.emplace_back(rat(c));
    return poly::from_coeffs(v, std::move(ps));
}

inline zx::zpoly zpoly_from_rat(const std::vector<rat>& cs)
{
    bigint l(1);
    for (auto& c : cs)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    zx::zpoly f;
    for (auto& c : cs)
        f.push_back(bigint(c.get_num()) * (l / bigint(c.get_den())));
    zx::trim(f);
    bigint g = zx::content(f);
    if (g > 1)
        for (auto& x : f)
            x /= g;
    return f;
}

// ---- squarefree decomposition (Yun) ----

inline factorization squarefree_decomposition(const poly& p, int v)
{
    if (p.is_zero())
        throw error("squarefree_decomposition: zero input");
    factorization out;
    out.var = v;
    poly cont = poly_content(p, v);
    poly f = poly_div_exact(p, cont);
    if (f.degree_in(v) == 0) {
        out.unit = felem(p);
        return out;
    }
    poly df = poly_derivative(f, v);
    poly g = poly_gcd(f, df);
    if (g.is_constant()) {
        out.factors.push_back({poly_canon(f), 1});
    } else {
        poly w = poly_div_exact(f, g);
        poly y = poly_div_exact(df, g);
        poly z = y - poly_derivative(w, v);
        int i = 1;
        while (w.degree_in(v) > 0) {
            poly a = poly_gcd(w, z);
            if (a.degree_in(v) > 0)
                out.factors.push_back({poly_canon(a), i});
            w = poly_div_exact(w, a);
            y = poly_div_exact(z, a);
            z = y - poly_derivative(w, v);
            ++i;
        }
    }
    felem prod(1);
    for (auto& [q, m] : out.factors)
        prod = prod * felem(q).pow(m);
    out.unit = felem(p) / prod;
    if (out.unit.level() >= v && out.unit.num().degree_in(v) + out.unit.den().degree_in(v) > 0)
        throw error("squarefree_decomposition: unit not in the lower field");
    return out;
}

// ---- multivariate machinery ----

inline void vars_below_rec(const poly& p, int v, std::set<int>& out)
{
    if (p.is_constant())
        return;
    if (p.level() < v)
        out.insert(p.level());
    for (int j = 0; j <= p.degree(); ++j)
        vars_below_rec(p.coeff_in(p.level(), j), v, out);
}

inline std::vector<int> vars_below(const poly& p, int v)
{
    std::set<int> s;
    vars_below_rec(p, v, s);
    s.erase(v);
    std::vector<int> r(s.begin(), s.end());
    return r;
}

// split p by total degree in the given variables
inline void split_total_degree(const poly& p, const std::set<int>& vars,
                               std::map<int, poly>& out, int shift = 0)
{
    if (p.is_constant()) {
        if (!p.is_zero()) {
            auto it = out.find(shift);
            if (it == out.end())
                out.emplace(shift, p);
            else
                it->second = it->second + p;
        }
        return;
    }
    int v = p.level();
    bool counted = vars.count(v) > 0;
    for (int j = 0; j <= p.degree(); ++j) {
        poly c = p.coeff_in(v, j);
        if (c.is_zero())
            continue;
        std::map<int, poly> sub;
        split_total_degree(c, vars, sub, shift + (counted ? j : 0));
        poly tj = poly::variable(v).pow(j);
        for (auto& [d, q] : sub) {
            poly add = q * tj;
            auto it = out.find(d);
            if (it == out.end())
                out.emplace(d, std::move(add));
            else
                it->second = it->second + add;
        }
    }
}

inline int total_degree_in(const poly& p, const std::vector<int>& vars)
{
    std::set<int> vs(vars.begin(), vars.end());
    std::map<int, poly> parts;
    split_total_degree(p, vs, parts);
    int d = 0;
    for (auto& [k, q] : parts)
        d = std::max(d, k);
    return d;
}

namespace detail_factor {

// univariate rational helpers on vector<rat> (monic arithmetic only)
using rvec = std::vector<rat>;

inline void rtrim(rvec& a)
{
    while (!a.empty() && is_zero(a.back()))
        a.pop_back();
}

inline rvec rmul(const rvec& a, const rvec& b)
{
    if (a.empty() || b.empty())
        return {};
    rvec r(a.size() + b.size() - 1, rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    rtrim(r);
    return r;
}

inline rvec rmod(rvec a, const rvec& b)
{
    rat li = rat(1) / b.back();
    while (a.size() >= b.size() && !a.empty()) {
        rat f = a.back() * li;
        size_t sh = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[sh + j] -= f * b[j];
        rtrim(a);
    }
    return a;
}

inline rvec rsub(rvec a, const rvec& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), rat(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    rtrim(a);
    return a;
}

// Bezout cofactors for pairwise coprime monic seeds: cof_i * prod_{l!=i}
// seed_l == 1 mod seed_i
inline std::vector<rvec> bezout_cofactors(const std::vector<rvec>& seeds)
{
    size_t r = seeds.size();
    std::vector<rvec> cof(r);
    for (size_t i = 0; i < r; ++i) {
        rvec prod = {rat(1)};
        for (size_t l = 0; l < r; ++l)
            if (l != i)
                prod = rmod(rmul(prod, seeds[l]), seeds[i]);
        // invert prod mod seeds[i] by extended Euclid
        rvec r0 = seeds[i], r1 = prod;
        rvec t0 = {}, t1 = {rat(1)};
        while (!r1.empty()) {
            // divrem r0 by r1
            rvec a = r0, q(a.size() >= r1.size() ? a.size() - r1.size() + 1 : 0, rat(0));
            rat li = rat(1) / r1.back();
            while (a.size() >= r1.size() && !a.empty()) {
                rat f = a.back() * li;
                size_t sh = a.size() - r1.size();
                q[sh] = f;
                for (size_t j = 0; j < r1.size(); ++j)
                    a[sh + j] -= f * r1[j];
                rtrim(a);
            }
            rtrim(q);
            r0 = std::move(r1);
            r1 = std::move(a);
            rvec t2 = rsub(t0, rmul(q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        rat li = rat(1) / r0.back();
        for (auto& x : t0)
            x *= li;
        cof[i] = rmod(t0, seeds[i]);
    }
    return cof;
}

// ufactor: y-coefficient vector with multivariate poly entries
using mpoly_vec = std::vector<poly>;

inline mpoly_vec mv_mul(const mpoly_vec& a, const mpoly_vec& b)
{
    if (a.empty() || b.empty())
        return {};
    mpoly_vec r(a.size() + b.size() - 1, poly(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] = r[i + j] + a[i] * b[j];
    }
    while (!r.empty() && r.back().is_zero())
        r.pop_back();
    return r;
}

inline mpoly_vec mv_truncate(mpoly_vec a, const std::set<int>& vars, int N)
{
    for (auto& c : a) {
        std::map<int, poly> parts;
        split_total_degree(c, vars, parts);
        poly keep(0);
        for (auto& [d, q] : parts)
            if (d <= N)
                keep = keep + q;
        c = keep;
    }
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
    return a;
}

// reduce a mod the monic rational seed (y-degree reduction)
inline mpoly_vec mv_mod_seed(mpoly_vec a, const rvec& seed)
{
    while (a.size() >= seed.size() && !a.empty()) {
        poly f = a.back();
        size_t sh = a.size() - seed.size();
        for (size_t j = 0; j < seed.size(); ++j)
            a[sh + j] = a[sh + j] - poly(seed[j]) * f;
        while (!a.empty() && a.back().is_zero())
            a.pop_back();
    }
    return a;
}

} // namespace detail_factor

// irreducible factors of a primitive squarefree p (degree >= 1 in v) over
// the fraction field of the variables below
inline std::vector<poly> factor_sqfree(const poly& p, int v, std::mt19937_64& rng)
{
    using namespace detail_factor;
    if (p.degree_in(v) == 1)
        return {poly_canon(p)};
    std::vector<int> lvars = vars_below(p, v);
    if (lvars.empty()) {
        zx::zpoly f = zpoly_from_rat(rat_coeffs(p, v));
        auto fs = factor_sqfree_z(f, rng);
        std::vector<poly> out;
        for (auto& g : fs)
            out.push_back(poly_canon(poly_from_zpoly(v, g)));
        return out;
    }

    int d = p.degree_in(v);
    poly lc = p.coeff_in(v, d);
    std::set<int> vset(lvars.begin(), lvars.end());

    for (int attempt = 0; attempt < 40; ++attempt) {
        long bound = 3 + attempt;
        std::vector<long> a(lvars.size());
        for (auto& x : a)
            x = (long)(rng() % (2 * bound + 1)) - bound;
        // specialize the lower variables
        poly p0 = p;
        for (size_t i = 0; i < lvars.size(); ++i)
            p0 = p0.subst(lvars[i], poly(rat(a[i])));
        if (p0.degree_in(v) != d)
            continue;
        if (!poly_gcd(p0, poly_derivative(p0, v)).is_constant())
            continue;
        auto seeds_z = factor_sqfree_z(zpoly_from_rat(rat_coeffs(p0, v)), rng);
        if (seeds_z.size() == 1)
            return {poly_canon(p)};

        // monic transform M(y) = lc^(d-1) p(t -> y/lc), then shift the lower
        // variables so the chosen point sits at the origin
        mpoly_vec M(d + 1, poly(0));
        for (int j = 0; j < d; ++j)
            M[j] = p.coeff_in(v, j) * lc.pow(d - 1 - j);
        M[d] = poly(1);
        for (auto& c : M)
            for (size_t i = 0; i < lvars.size(); ++i)
                c = c.subst(lvars[i], poly::variable(lvars[i]) + poly(rat(a[i])));

        // monic rational seeds of M at the origin
        std::vector<rvec> seeds;
        {
            poly lc0 = lc;
            for (size_t i = 0; i < lvars.size(); ++i)
                lc0 = lc0.subst(lvars[i], poly(rat(a[i])));
            rat l0 = lc0.constant();
            for (auto& s : seeds_z) {
                // seed for M: monic s_M(y) from s(t): s_M(y) = s(y/l0) * l0^deg / lc(s)
                rvec m(s.size());
                rat pw(1);
                for (size_t j = s.size(); j-- > 0;) {
                    m[j] = rat(s[j]) * pw;
                    pw *= l0;
                }
                rat li = rat(1) / m.back();
                for (auto& x : m)
                    x *= li;
                seeds.push_back(std::move(m));
            }
        }
        auto cof = bezout_cofactors(seeds);

        int Ntotal = 0;
        for (auto& c : M)
            Ntotal = std::max(Ntotal, total_degree_in(c, lvars));

        for (int Ngrow = 0; Ngrow < 3; ++Ngrow) {
            int N = (Ntotal + 1) << Ngrow;
            // lift
            std::vector<mpoly_vec> F;
            for (auto& s : seeds) {
                mpoly_vec f(s.size());
                for (size_t j = 0; j < s.size(); ++j)
                    f[j] = poly(s[j]);
                F.push_back(std::move(f));
            }
            for (int s = 1; s <= N; ++s) {
                mpoly_vec prod = {poly(1)};
                for (auto& Fi : F)
                    prod = mv_truncate(mv_mul(prod, Fi), vset, s);
                mpoly_vec err(M.size(), poly(0));
                for (size_t j = 0; j < M.size(); ++j)
                    err[j] = M[j] - (j < prod.size() ? prod[j] : poly(0));
                mpoly_vec E(err.size(), poly(0));
                bool zero = true;
                for (size_t j = 0; j < err.size(); ++j) {
                    std::map<int, poly> parts;
                    split_total_degree(err[j], vset, parts);
                    auto it = parts.find(s);
                    if (it != parts.end()) {
                        E[j] = it->second;
                        if (!E[j].is_zero())
                            zero = false;
                    }
                }
                if (zero)
                    continue;
                while (!E.empty() && E.back().is_zero())
                    E.pop_back();
                for (size_t i = 0; i < F.size(); ++i) {
                    // delta_i = cof_i * E mod seed_i
                    mpoly_vec ce(E.size() + cof[i].size(), poly(0));
                    ce.assign(E.size() + cof[i].size(), poly(0));
                    for (size_t x = 0; x < cof[i].size(); ++x)
                        for (size_t y = 0; y < E.size(); ++y)
                            ce[x + y] = ce[x + y] + poly(cof[i][x]) * E[y];
                    while (!ce.empty() && ce.back().is_zero())
                        ce.pop_back();
                    mpoly_vec delta = mv_mod_seed(std::move(ce), seeds[i]);
                    for (size_t j = 0; j < delta.size(); ++j) {
                        if (j >= F[i].size())
                            F[i].resize(j + 1, poly(0));
                        F[i][j] = F[i][j] + delta[j];
                    }
                }
            }

            // recombination
            auto assemble = [&](const mpoly_vec& cs) {
                std::vector<poly> v_cs(cs.begin(), cs.end());
                return poly::from_coeffs(v, std::move(v_cs));
            };
            poly Mpoly = assemble(M);
            auto next_combination = [](std::vector<size_t>& idx, size_t n) {
                size_t k = idx.size();
                for (size_t i = k; i-- > 0;) {
                    if (idx[i] + (k - i) < n) {
                        ++idx[i];
                        for (size_t j = i + 1; j < k; ++j)
                            idx[j] = idx[j - 1] + 1;
                        return true;
                    }
                }
                return false;
            };
            std::vector<size_t> alive(F.size());
            for (size_t i = 0; i < alive.size(); ++i)
                alive[i] = i;
            std::vector<poly> found;
            poly Mrem = Mpoly;
            bool progress = true;
            while (progress && !alive.empty()) {
                progress = false;
                size_t n = alive.size();
                for (size_t card = 1; 2 * card <= n && !progress; ++card) {
                    std::vector<size_t> idx(card);
                    for (size_t i = 0; i < card; ++i)
                        idx[i] = i;
                    do {
                        mpoly_vec cand = {poly(1)};
                        for (size_t i : idx)
                            cand = mv_truncate(mv_mul(cand, F[alive[i]]), vset, N);
                        poly c = assemble(cand);
                        auto quo = poly_exact_div(Mrem, c);
                        if (quo) {
                            found.push_back(c);
                            Mrem = *quo;
                            std::vector<size_t> na;
                            for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                                if (j < idx.size() && idx[j] == i)
                                    ++j;
                                else
                                    na.push_back(alive[i]);
                            }
                            alive = std::move(na);
                            progress = true;
                            break;
                        }
                    } while (next_combination(idx, n));
                }
            }
            if (Mrem.degree_in(v) > 0)
                found.push_back(Mrem);
            // success iff everything reconstructed
            poly check(1);
            for (auto& g : found)
                check = check * g;
            if (poly_exact_div(check, Mpoly) && poly_exact_div(Mpoly, check)) {
                // map factors of M back to factors of p: unshift lower vars,
                // substitute y -> lc * t, take the primitive part
                std::vector<poly> out;
                poly prem = p;
                for (auto& h : found) {
                    poly g = h;
                    for (size_t i = 0; i < lvars.size(); ++i)
                        g = g.subst(lvars[i], poly::variable(lvars[i]) - poly(rat(a[i])));
                    // y -> lc*t: coefficients pick up lc^j
                    std::vector<poly> gc(g.coeffs_in(v));
                    poly pw(1);
                    for (size_t j = 0; j < gc.size(); ++j) {
                        gc[j] = gc[j] * pw;
                        pw = pw * lc;
                    }
                    poly gt = poly::from_coeffs(v, std::move(gc));
                    gt = poly_primitive(gt, v);
                    auto q = poly_exact_div(prem, gt);
                    if (!q)
                        throw error("factorization incomplete");
                    prem = *q;
                    out.push_back(poly_canon(gt));
                }
                if (prem.degree_in(v) > 0)
                    throw error("factorization incomplete");
                return out;
            }
        }
    }
    throw error("factorization incomplete");
}

// complete irreducible factorization of p over the fraction field of the
// levels below v; elements free of v count as the unit
inline factorization factor_top(const poly& p, int v, std::mt19937_64& rng)
{
    if (p.is_zero())
        throw error("factor_top: zero input");
    factorization sq = squarefree_decomposition(p, v);
    factorization out;
    out.var = v;
    for (auto& [part, mult] : sq.factors)
        for (auto& irr : factor_sqfree(part, v, rng))
            out.factors.push_back({irr, mult});
    felem prod(1);
    for (auto& [q, m] : out.factors)
        prod = prod * felem(q).pow(m);
    out.unit = felem(p) / prod;
    if (out.unit.num().degree_in(v) + out.unit.den().degree_in(v) > 0)
        throw error("factorization incomplete");
    std::sort(out.factors.begin(), out.factors.end(), [&](const factor_pair& a, const factor_pair& b) {
        if (a.f.degree_in(v) != b.f.degree_in(v))
            return a.f.degree_in(v) < b.f.degree_in(v);
        return poly_str(a.f) < poly_str(b.f);
    });
    return out;
}

inline factorization factor_top(const poly& p, int v)
{
    std::mt19937_64 rng(0x5eedf00dULL);
    return factor_top(p, v, rng);
}

// ---- roots over Q ----

inline std::set<rat> rational_roots(const poly& p, int v)
{
    if (p.is_zero())
        throw error("rational_roots: zero input");
    std::set<rat> roots;
    if (p.degree_in(v) == 0)
        return roots;
    factorization f = factor_top(p, v);
    for (auto& [g, m] : f.factors) {
        if (g.degree_in(v) != 1)
            continue;
        rat a = g.coeff_in(v, 1).constant(), b = g.coeff_in(v, 0).constant();
        roots.insert(-b / a);
    }
    return roots;
}

inline std::set<long> integer_roots(const poly& p, int v)
{
    std::set<long> out;
    for (auto& r : rational_roots(p, v))
        if (auto n = to_long(r))
            out.insert(*n);
    return out;
}

// ---- divisor enumeration ----

// lazily enumerates all monic divisors of a factorization, 1 first
class divisor_enum {
public:
    explicit divisor_enum(const factorization& f) : f_(&f), exps_(f.factors.size(), 0) {}

    std::optional<poly> next()
    {
        if (done_)
            return std::nullopt;
        poly d(1);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0)
                d = d * f_->factors[i].f.pow(exps_[i]);
        // odometer step
        size_t i = 0;
        for (; i < exps_.size(); ++i) {
            if (exps_[i] < f_->factors[i].mult) {
                ++exps_[i];
                break;
            }
            exps_[i] = 0;
        }
        if (i == exps_.size())
            done_ = true;
        return poly_canon(d);
    }

    long count() const
    {
        long n = 1;
        for (auto& [f, m] : f_->factors)
            n *= (m + 1);
        return n;
    }

private:
    const factorization* f_;
    std::vector<int> exps_;
    bool done_ = false;
};

} // namespace pisigma

#endif
