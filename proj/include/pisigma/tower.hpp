#ifndef PISIGMA_TOWER_HPP
#define PISIGMA_TOWER_HPP

// Towers of monomial extensions over Q and the shift automorphism sigma.
// Level i adjoins a variable t_i with sigma(t_i) = alpha*t_i + beta where
// alpha, beta live strictly below. Kinds: Sigma* (alpha = 1), Pi (beta = 0),
// and the constant-coefficient affine form accepted only by the normal-form
// machinery.

#include "pisigma/field_elem.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pisigma {

enum class monomial_kind { sigma_star, pi, affine };

struct monomial {
    std::string name;
    monomial_kind kind;
    felem alpha; // sigma(t) = alpha*t + beta
    felem beta;
};

class tower {
public:
    tower() = default;

    int push(monomial m)
    {
        int v = (int)ms_.size() + 1;
        if (m.alpha.level() >= v || m.beta.level() >= v)
            throw error("monomial data must live strictly below its level");
        switch (m.kind) {
        case monomial_kind::sigma_star:
            if (!m.alpha.is_one())
                throw error("sigma* monomial needs alpha = 1");
            break;
        case monomial_kind::pi:
            if (m.alpha.is_zero() || !m.beta.is_zero())
                throw error("pi monomial needs alpha != 0, beta = 0");
            break;
        case monomial_kind::affine:
            if (!m.alpha.is_constant() || !m.beta.is_constant() || m.alpha.is_zero())
                throw error("affine monomial needs constant alpha != 0, beta");
            break;
        }
        ms_.push_back(std::move(m));
        rebuild_images();
        return v;
    }

    int size() const { return (int)ms_.size(); }
    const monomial& at(int v) const { return ms_.at(v - 1); }
    bool has_affine() const
    {
        for (auto& m : ms_)
            if (m.kind == monomial_kind::affine)
                return true;
        return false;
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> n;
        for (auto& m : ms_)
            n.push_back(m.name);
        return n;
    }

    int var_index(const std::string& name) const
    {
        for (size_t i = 0; i < ms_.size(); ++i)
            if (ms_[i].name == name)
                return (int)i + 1;
        return 0;
    }

    bool trusted() const { return trusted_; }
    void mark_trusted() { trusted_ = true; }

    // replace the top Pi monomial t by t^-1 (sigma(t^-1) = alpha^-1 t^-1);
    // used to solve in k[t^-1] through the polynomial machinery
    tower with_inverted_top() const
    {
        if (ms_.empty() || ms_.back().kind != monomial_kind::pi)
            throw error("with_inverted_top: top monomial is not a pi monomial");
        tower t = *this;
        t.ms_.back().alpha = ms_.back().alpha.inverse();
        t.ms_.back().name = ms_.back().name + "_inv";
        t.rebuild_images();
        return t;
    }

    felem sigma(const felem& f, long n = 1) const
    {
        felem g = f;
        for (; n > 0; --n)
            g = step(g, sig_);
        for (; n < 0; ++n)
            g = step(g, sig_inv_);
        return g;
    }

    felem sigma(const poly& p, long n = 1) const { return sigma(felem(p), n); }

    // sigma^n(t_v)
    felem sigma_var(int v, long n) const { return sigma(felem::variable(v), n); }

private:
    felem step(const felem& f, const std::vector<felem>& img) const
    {
        felem n = step_poly(f.num(), img), d = step_poly(f.den(), img);
        return n / d;
    }

    felem step_poly(const poly& p, const std::vector<felem>& img) const
    {
        if (p.is_constant())
            return felem(p);
        int v = p.level();
        const felem& tv = img.at(v - 1);
        felem acc;
        for (int j = p.degree(); j >= 0; --j)
            acc = acc * tv + step_poly(p.coeff_in(v, j), img);
        return acc;
    }

    void rebuild_images()
    {
        sig_.clear();
        sig_inv_.clear();
        for (size_t i = 0; i < ms_.size(); ++i) {
            const monomial& m = ms_[i];
            felem tv = felem::variable((int)i + 1);
            sig_.push_back(m.alpha * tv + m.beta);
            // sigma^-1(t) = (t - sigma^-1(beta)) / sigma^-1(alpha), where the
            // lower-level inverse images are already in place
            felem bi = step(m.beta, sig_inv_);
            felem ai = step(m.alpha, sig_inv_);
            sig_inv_.push_back((tv - bi) / ai);
        }
    }

    std::vector<monomial> ms_;
    std::vector<felem> sig_, sig_inv_;
    bool trusted_ = false;
};

// a^{(n)}_sigma = prod_{i<n} sigma^i(a)
inline felem sigma_factorial(const tower& tw, const felem& a, long n)
{
    if (n < 0)
        throw error("sigma_factorial: n must be nonnegative");
    felem r(1), cur = a;
    for (long i = 0; i < n; ++i) {
        r = r * cur;
        if (i + 1 < n)
            cur = tw.sigma(cur);
    }
    return r;
}

// a_{sigma,n} = sum_{i<n} sigma^i(a)
inline felem sigma_sum(const tower& tw, const felem& a, long n)
{
    if (n < 0)
        throw error("sigma_sum: n must be nonnegative");
    felem r(0), cur = a;
    for (long i = 0; i < n; ++i) {
        r = r + cur;
        if (i + 1 < n)
            cur = tw.sigma(cur);
    }
    return r;
}

// a^{(n)}_{sigma,sigma} = prod_{i<n} a^{(i)}_sigma
inline felem sigma_factorial2(const tower& tw, const felem& a, long n)
{
    if (n < 0)
        throw error("sigma_factorial2: n must be nonnegative");
    felem r(1);
    for (long i = 0; i < n; ++i)
        r = r * sigma_factorial(tw, a, i);
    return r;
}

// eta_j = sum_{v<j} sigma^v(beta) for a Sigma* level; sigma^j(t) = t + eta_j
inline felem eta_partial_sum(const tower& tw, int level, long j)
{
    const monomial& m = tw.at(level);
    if (m.kind != monomial_kind::sigma_star)
        throw error("eta_partial_sum: level is not a sigma* monomial");
    if (j < 0)
        throw error("eta_partial_sum: j must be nonnegative");
    return sigma_sum(tw, m.beta, j);
}

struct level_report {
    int level;
    bool ok;
    std::string detail;
    felem witness; // telescoping or radical witness when ok == false
};

struct tower_validation {
    bool ok;
    std::vector<level_report> levels;
};

// defined with the solver (validation at level i uses solvers below i)
tower_validation validate_tower(tower& tw);

} // namespace pisigma

#endif
