#ifndef PISIGMA_POLYNOMIAL_HPP
#define PISIGMA_POLYNOMIAL_HPP

// Recursive dense multivariate polynomials over Q in the tower variable
// order: a polynomial at level i is a dense coefficient vector in variable i
// whose entries live at strictly lower levels; level 0 is a rational scalar.
// The representation is canonical: no trailing zero coefficients and a
// degree-0 polynomial collapses to its (lower-level) coefficient, so
// structural equality is mathematical equality.

#include "pisigma/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>
#include <vector>

namespace pisigma {

class poly {
public:
    poly() : lv_(0), c_(0) {}
    poly(const rat& c) : lv_(0), c_(c) {} // NOLINT: implicit by design
    poly(long n) : lv_(0), c_(n) {}       // NOLINT

    static poly variable(int v)
    {
        assert(v >= 1);
        poly p;
        p.lv_ = v;
        p.cs_ = {poly(0), poly(1)};
        return p;
    }

    static poly from_coeffs(int v, std::vector<poly> cs)
    {
        assert(v >= 1);
        poly p;
        p.lv_ = v;
        p.cs_ = std::move(cs);
#ifndef NDEBUG
        for (auto& c : p.cs_)
            assert(c.lv_ < v);
#endif
        p.trim();
        return p;
    }

    int level() const { return lv_; }
    bool is_zero() const { return lv_ == 0 && sgn(c_) == 0; }
    bool is_constant() const { return lv_ == 0; }
    const rat& constant() const
    {
        assert(lv_ == 0);
        return c_;
    }

    // degree in the top variable of this polynomial (constants: 0)
    int degree() const { return lv_ == 0 ? 0 : (int)cs_.size() - 1; }

    // degree in variable v, wherever it occurs
    int degree_in(int v) const
    {
        if (lv_ < v)
            return 0;
        if (lv_ == v)
            return degree();
        int d = 0;
        for (auto& c : cs_)
            d = std::max(d, c.degree_in(v));
        return d;
    }

    // coefficient of var(v)^j when viewed as a polynomial in variable v >= level
    poly coeff_in(int v, int j) const
    {
        assert(v >= lv_ && v >= 1);
        if (lv_ < v)
            return j == 0 ? *this : poly(0);
        return j < (int)cs_.size() ? cs_[j] : poly(0);
    }

    const poly& lead() const
    {
        assert(lv_ >= 1);
        return cs_.back();
    }

    friend bool operator==(const poly& a, const poly& b)
    {
        if (a.lv_ != b.lv_)
            return false;
        if (a.lv_ == 0)
            return a.c_ == b.c_;
        return a.cs_ == b.cs_;
    }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    friend poly operator-(const poly& a)
    {
        poly r = a;
        r.negate();
        return r;
    }

    void negate()
    {
        if (lv_ == 0)
            c_ = -c_;
        else
            for (auto& c : cs_)
                c.negate();
    }

    friend poly operator+(const poly& a, const poly& b)
    {
        if (a.lv_ < b.lv_)
            return b + a;
        if (a.lv_ == 0)
            return poly(a.c_ + b.c_);
        poly r = a;
        if (b.lv_ < a.lv_) {
            r.cs_[0] = r.cs_[0] + b;
        } else {
            if (r.cs_.size() < b.cs_.size())
                r.cs_.resize(b.cs_.size(), poly(0));
            for (size_t i = 0; i < b.cs_.size(); ++i)
                r.cs_[i] = r.cs_[i] + b.cs_[i];
        }
        r.trim();
        return r;
    }

    friend poly operator-(const poly& a, const poly& b) { return a + (-b); }

    friend poly operator*(const poly& a, const poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return poly(0);
        if (a.lv_ < b.lv_)
            return b * a;
        if (a.lv_ == 0)
            return poly(a.c_ * b.c_);
        poly r;
        r.lv_ = a.lv_;
        if (b.lv_ < a.lv_) {
            r.cs_.reserve(a.cs_.size());
            for (auto& c : a.cs_)
                r.cs_.push_back(c * b);
        } else {
            r.cs_.assign(a.cs_.size() + b.cs_.size() - 1, poly(0));
            for (size_t i = 0; i < a.cs_.size(); ++i) {
                if (a.cs_[i].is_zero())
                    continue;
                for (size_t j = 0; j < b.cs_.size(); ++j)
                    if (!b.cs_[j].is_zero())
                        r.cs_[i + j] = r.cs_[i + j] + a.cs_[i] * b.cs_[j];
            }
        }
        r.trim();
        return r;
    }

    poly pow(long e) const
    {
        assert(e >= 0);
        poly r(1), base = *this;
        while (e > 0) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // view as polynomial in variable v (>= level): dense coefficient list
    std::vector<poly> coeffs_in(int v) const
    {
        assert(v >= 1 && lv_ <= v);
        if (lv_ < v)
            return {*this};
        return cs_;
    }

    // substitute variable v by a polynomial (value's variables must avoid v
    // unless intended); used for sigma images with polynomial data and for
    // evaluation at rational points
    poly subst(int v, const poly& value) const
    {
        if (lv_ < v)
            return *this;
        if (lv_ == v) {
            poly acc(0);
            for (size_t j = cs_.size(); j-- > 0;)
                acc = acc * value + cs_[j];
            return acc;
        }
        std::vector<poly> nc;
        nc.reserve(cs_.size());
        for (auto& c : cs_)
            nc.push_back(c.subst(v, value));
        poly acc(0);
        poly tv = variable(lv_);
        for (size_t j = nc.size(); j-- > 0;)
            acc = acc * tv + nc[j];
        return acc;
    }

    // the scalar at the bottom of the leading-coefficient chain
    rat rec_lc() const
    {
        const poly* p = this;
        while (p->lv_ != 0)
            p = &p->cs_.back();
        return p->c_;
    }

    size_t hash() const
    {
        if (lv_ == 0) {
            std::hash<std::string> h;
            return h(c_.get_str());
        }
        size_t s = (size_t)lv_ * 1099511628211ULL;
        for (auto& c : cs_)
            s = s * 31 + c.hash();
        return s;
    }

    std::string str() const;

private:
    void trim()
    {
        while (!cs_.empty() && cs_.back().is_zero())
            cs_.pop_back();
        if (cs_.empty()) {
            lv_ = 0;
            c_ = 0;
        } else if (cs_.size() == 1) {
            poly inner = std::move(cs_[0]);
            *this = std::move(inner);
        }
    }

    int lv_;
    rat c_;
    std::vector<poly> cs_;
};

inline poly operator*(const rat& a, const poly& b) { return poly(a) * b; }

inline poly poly_scale(const poly& p, const rat& c) { return poly(c) * p; }

// ---- printing (canonical: expanded, graded-lex descending, tower order) ----

namespace detail {

struct term {
    std::vector<int> exp; // exponent per variable 1..e
    rat c;
};

inline void collect_terms(const poly& p, std::vector<int>& exp, int maxvar,
                          std::vector<term>& out)
{
    if (p.is_zero())
        return;
    if (p.is_constant()) {
        out.push_back({exp, p.constant()});
        return;
    }
    int v = p.level();
    for (int j = 0; j <= p.degree(); ++j) {
        poly c = p.coeff_in(v, j);
        if (c.is_zero())
            continue;
        exp[v - 1] = j;
        collect_terms(c, exp, maxvar, out);
        exp[v - 1] = 0;
    }
}

inline bool term_before(const term& a, const term& b)
{
    long ta = 0, tb = 0;
    for (int e : a.exp)
        ta += e;
    for (int e : b.exp)
        tb += e;
    if (ta != tb)
        return ta > tb;
    return a.exp > b.exp; // lex on tower order, descending
}

} // namespace detail

// names[v-1] is the display name of variable v; defaults to t1, t2, ...
inline std::string poly_str(const poly& p, const std::vector<std::string>& names = {})
{
    if (p.is_zero())
        return "0";
    int e = p.level();
    std::vector<int> exp(e, 0);
    std::vector<detail::term> terms;
    detail::collect_terms(p, exp, e, terms);
    std::sort(terms.begin(), terms.end(), detail::term_before);
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms) {
        rat c = t.c;
        bool neg = sgn(c) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (neg)
            c = -c;
        std::string mono;
        for (size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += i < names.size() ? names[i] : "t" + std::to_string(i + 1);
            if (t.exp[i] > 1)
                mono += "^" + std::to_string(t.exp[i]);
        }
        if (mono.empty())
            os << c.get_str();
        else if (c == 1)
            os << mono;
        else
            os << c.get_str() << "*" << mono;
    }
    return os.str();
}

inline std::string poly::str() const { return poly_str(*this); }

} // namespace pisigma

#endif
