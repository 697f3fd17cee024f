#ifndef PISIGMA_FIELD_ELEM_HPP
#define PISIGMA_FIELD_ELEM_HPP

// Reduced rational functions over the tower: num/den coprime, den nonzero
// with recursive leading coefficient 1, zero represented as 0/1. Values are
// canonical, so structural equality is mathematical equality.

#include "pisigma/poly_gcd.hpp"

namespace pisigma {

class felem {
public:
    felem() : num_(0), den_(1) {}
    felem(const rat& c) : num_(c), den_(1) {} // NOLINT
    felem(long n) : num_(n), den_(1) {}       // NOLINT
    felem(const poly& p) : num_(p), den_(1) {} // NOLINT
    felem(poly num, poly den) { assign(std::move(num), std::move(den)); }

    static felem variable(int v) { return felem(poly::variable(v)); }

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }
    int level() const { return std::max(num_.level(), den_.level()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == poly(1) && den_ == poly(1); }
    bool is_poly() const { return den_ == poly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    rat constant() const
    {
        assert(is_constant());
        return num_.constant() / den_.constant();
    }

    friend bool operator==(const felem& a, const felem& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const felem& a, const felem& b) { return !(a == b); }

    friend felem operator-(const felem& a) { return felem::raw(-a.num_, a.den_); }

    // sums reduce through gcd(den, den); products through the cross gcds, so
    // the final normalization never sees a reducible pair
    friend felem operator+(const felem& a, const felem& b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        poly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant())
            return raw_lc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        poly da = poly_div_exact(a.den_, g), db = poly_div_exact(b.den_, g);
        poly t = a.num_ * db + b.num_ * da;
        if (t.is_zero())
            return felem();
        poly h = poly_gcd(t, g);
        if (!h.is_constant()) {
            t = poly_div_exact(t, h);
            g = poly_div_exact(g, h);
        }
        return raw_lc(std::move(t), g * da * db);
    }
    friend felem operator-(const felem& a, const felem& b) { return a + (-b); }
    friend felem operator*(const felem& a, const felem& b)
    {
        if (a.is_zero() || b.is_zero())
            return felem();
        poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        poly n1 = g1.is_constant() ? a.num_ : poly_div_exact(a.num_, g1);
        poly d2 = g1.is_constant() ? b.den_ : poly_div_exact(b.den_, g1);
        poly n2 = g2.is_constant() ? b.num_ : poly_div_exact(b.num_, g2);
        poly d1 = g2.is_constant() ? a.den_ : poly_div_exact(a.den_, g2);
        return raw_lc(n1 * n2, d1 * d2);
    }
    friend felem operator/(const felem& a, const felem& b)
    {
        if (b.is_zero())
            throw error("division by zero");
        if (a.is_zero())
            return felem();
        return a * b.inverse();
    }

    felem inverse() const
    {
        if (is_zero())
            throw error("division by zero");
        return raw_lc(den_, num_);
    }

    felem pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        felem r(1), base = *this;
        while (e > 0) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    size_t hash() const { return num_.hash() * 1000003 + den_.hash(); }

    std::string str(const std::vector<std::string>& names = {}) const
    {
        if (is_poly())
            return poly_str(num_, names);
        std::string n = poly_str(num_, names), d = poly_str(den_, names);
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }

private:
    static felem raw(poly n, poly d)
    {
        felem f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    // already reduced: only normalize the denominator's leading chain
    static felem raw_lc(poly n, poly d)
    {
        rat lc = d.rec_lc();
        felem f;
        if (lc == 1) {
            f.num_ = std::move(n);
            f.den_ = std::move(d);
        } else {
            f.num_ = poly(rat(1) / lc) * n;
            f.den_ = poly(rat(1) / lc) * d;
        }
        return f;
    }

    void assign(poly n, poly d)
    {
        if (d.is_zero())
            throw error("division by zero");
        if (n.is_zero()) {
            num_ = poly(0);
            den_ = poly(1);
            return;
        }
        poly g = poly_gcd(n, d);
        if (!g.is_constant()) {
            n = poly_div_exact(n, g);
            d = poly_div_exact(d, g);
        }
        rat lc = d.rec_lc();
        num_ = poly(rat(1) / lc) * n;
        den_ = poly(rat(1) / lc) * d;
    }

    poly num_, den_;
};

inline felem operator*(const rat& a, const felem& b) { return felem(a) * b; }

// spec operation: reduced, canonically normalized representative
inline felem normalize(const poly& num, const poly& den) { return felem(num, den); }

} // namespace pisigma

#endif
