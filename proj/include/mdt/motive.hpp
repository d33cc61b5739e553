#pragma once

#include "mdt/vpoly.hpp"

namespace mdt {

/// Exact rational function in v = L^(1/2) over the integers, kept in canonical
/// form: numerator and denominator share no polynomial factor and no content,
/// the denominator is a true polynomial with nonzero constant term and positive
/// leading coefficient (v-power shifts live in the numerator).
class MotiveRat {
public:
    VPoly num, den;

    MotiveRat() : num(), den(1) {}
    MotiveRat(long n) : num(n), den(1) {}
    MotiveRat(Int n) : num(std::move(n)), den(1) {}
    MotiveRat(VPoly n) : num(std::move(n)), den(1) {}
    MotiveRat(VPoly n, VPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.zero()) throw std::domain_error("zero denominator");
        canonicalize();
    }
    MotiveRat(const Rat& r) : num(numerator(r)), den(denominator(r)) {}

    static MotiveRat v_pow(int k) { return MotiveRat(VPoly::v(k)); }
    /// L^k = v^(2k)
    static MotiveRat L_pow(int k) { return MotiveRat(VPoly::v(2 * k)); }
    /// (-v)^k = (-1)^k v^k, k may be negative
    static MotiveRat neg_v_pow(int k) {
        MotiveRat r = v_pow(k);
        if (k % 2 != 0) r.num = -r.num;
        return r;
    }

    bool zero() const { return num.zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool polynomial() const { return den.is_one(); }

    MotiveRat operator-() const {
        MotiveRat r = *this;
        r.num = -r.num;
        return r;
    }

    MotiveRat operator+(const MotiveRat& o) const {
        if (zero()) return o;
        if (o.zero()) return *this;
        MotiveRat r;
        if (den == o.den) {
            r.num = num + o.num;
            r.den = den;
        } else {
            VPoly g = VPoly::gcd(den, o.den);
            VPoly da = den.div_exact(g), db = o.den.div_exact(g);
            r.num = num * db + o.num * da;
            r.den = den * db;
        }
        r.canonicalize();
        return r;
    }
    MotiveRat operator-(const MotiveRat& o) const { return *this + (-o); }

    MotiveRat operator*(const MotiveRat& o) const {
        if (zero() || o.zero()) return MotiveRat();
        MotiveRat r;
        if (den.is_one() && o.den.is_one()) {
            r.num = num * o.num;
            r.den = VPoly(1);
            return r;
        }
        // cross-cancel: the product of reduced fractions is then born reduced
        auto [n1, s1] = split(num);
        auto [n2, s2] = split(o.num);
        VPoly g1 = VPoly::gcd(n1, o.den);
        VPoly g2 = VPoly::gcd(n2, den);
        r.num = (n1.div_exact(g1) * n2.div_exact(g2)).shifted(s1 + s2);
        r.den = den.div_exact(g2) * o.den.div_exact(g1);
        return r;
    }
    MotiveRat& operator*=(const MotiveRat& o) { *this = *this * o; return *this; }
    MotiveRat& operator+=(const MotiveRat& o) { *this = *this + o; return *this; }

    MotiveRat operator/(const MotiveRat& o) const {
        if (o.zero()) throw std::domain_error("division by zero");
        MotiveRat inv;
        inv.num = o.den;
        inv.den = o.num;
        inv.canonicalize();
        return *this * inv;
    }

    bool operator==(const MotiveRat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const MotiveRat& o) const { return !(*this == o); }

    /// v -> v^n on numerator and denominator. Coprimality survives the
    /// substitution (a common root of the images yields a common root of the
    /// originals), so no re-reduction is needed.
    MotiveRat adams(int n) const {
        if (n < 1) throw invalid_input("adams requires n >= 1");
        MotiveRat r;
        r.num = num.adams(n);
        r.den = den.adams(n);
        return r;
    }

    MotiveRat pow(int k) const {
        if (k < 0) return MotiveRat(1) / this->pow(-k);
        MotiveRat r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            if (k >>= 1) b *= b;
        }
        return r;
    }

    /// value with v^2 := q; rejects odd v-powers
    Rat eval_even(const Rat& q) const {
        Rat dv = den.eval_even(q);
        if (dv == 0) throw pole_error("denominator vanishes at L = " + std::string(q.str()));
        return num.eval_even(q) / dv;
    }

    /// value at v := x
    Rat eval_v(const Rat& x) const {
        Rat dv = den.eval(x);
        if (dv == 0) throw pole_error("denominator vanishes at v = " + std::string(x.str()));
        return num.eval(x) / dv;
    }

    /// degree in v at infinity (num degree minus den degree); num must be nonzero
    int deg_at_inf() const { return num.max_exp() - den.max_exp(); }

    std::string str() const {
        if (den.is_one()) return num.str();
        std::string n = num.str(), d = den.str();
        std::string np = num.c.size() > 1 ? "(" + n + ")" : n;
        std::string dp = den.c.size() > 1 ? "(" + d + ")" : d;
        return np + "/" + dp;
    }

private:
    // factor off the v-shift making min_exp zero
    static std::pair<VPoly, int> split(const VPoly& p) {
        int s = p.min_exp();
        return {p.shifted(-s), s};
    }

    void canonicalize() {
        if (num.zero()) {
            den = VPoly(1);
            return;
        }
        auto [n, sn] = split(num);
        auto [d, sd] = split(den);
        VPoly g = VPoly::gcd(n, d);
        if (!g.is_one()) {
            n = n.div_exact(g);
            d = d.div_exact(g);
        }
        if (d.lead() < 0) {
            n = -n;
            d = -d;
        }
        num = n.shifted(sn - sd);
        den = d;
    }
};

/// [GL_n] = prod_{i=0}^{n-1} (L^n - L^i), as a polynomial in v (L = v^2)
inline VPoly gl_order(int n) {
    VPoly r(1);
    for (int i = 0; i < n; ++i) r *= VPoly::v(2 * n) - VPoly::v(2 * i);
    return r;
}

/// (-v)^(-d) * x
inline MotiveRat vir_normalize(const MotiveRat& x, int d) {
    return MotiveRat::neg_v_pow(-d) * x;
}

}  // namespace mdt
