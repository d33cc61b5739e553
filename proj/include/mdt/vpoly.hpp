#pragma once

#include "mdt/common.hpp"

#include <map>
#include <sstream>

namespace mdt {

/// Laurent polynomial in the formal variable v = L^(1/2), integer coefficients.
/// Exponents may be negative; zero coefficients are never stored.
class VPoly {
public:
    std::map<int, Int> c;

    VPoly() = default;
    VPoly(long n) { if (n != 0) c[0] = n; }
    VPoly(Int n) { if (n != 0) c[0] = std::move(n); }

    static VPoly term(int e, Int coeff) {
        VPoly p;
        if (coeff != 0) p.c[e] = std::move(coeff);
        return p;
    }
    static VPoly v(int e = 1) { return term(e, 1); }

    bool zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c.begin()->first == 0 && c.begin()->second == 1; }

    int min_exp() const { return c.begin()->first; }
    int max_exp() const { return c.rbegin()->first; }
    const Int& lead() const { return c.rbegin()->second; }

    Int coeff(int e) const {
        auto it = c.find(e);
        return it == c.end() ? Int(0) : it->second;
    }

    VPoly& operator+=(const VPoly& o) {
        for (auto& [e, x] : o.c) {
            auto it = c.find(e);
            if (it == c.end()) {
                c.emplace(e, x);
            } else {
                it->second += x;
                if (it->second == 0) c.erase(it);
            }
        }
        return *this;
    }
    VPoly operator+(const VPoly& o) const { VPoly r = *this; r += o; return r; }

    VPoly operator-() const {
        VPoly r = *this;
        for (auto& [e, x] : r.c) x = -x;
        return r;
    }
    VPoly operator-(const VPoly& o) const { return *this + (-o); }
    VPoly& operator-=(const VPoly& o) { return *this += (-o); }

    VPoly operator*(const VPoly& o) const {
        VPoly r;
        for (auto& [e1, x1] : c)
            for (auto& [e2, x2] : o.c) {
                Int p = x1 * x2;
                auto it = r.c.find(e1 + e2);
                if (it == r.c.end()) {
                    r.c.emplace(e1 + e2, std::move(p));
                } else {
                    it->second += p;
                    if (it->second == 0) r.c.erase(it);
                }
            }
        return r;
    }
    VPoly& operator*=(const VPoly& o) { *this = *this * o; return *this; }

    bool operator==(const VPoly& o) const { return c == o.c; }

    /// multiply by v^k
    VPoly shifted(int k) const {
        VPoly r;
        for (auto& [e, x] : c) r.c.emplace(e + k, x);
        return r;
    }

    /// v -> v^n
    VPoly adams(int n) const {
        VPoly r;
        for (auto& [e, x] : c) r.c.emplace(e * n, x);
        return r;
    }

    Int content() const {
        Int g = 0;
        for (auto& [e, x] : c) {
            g = int_gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    VPoly div_int(const Int& d) const {
        VPoly r;
        for (auto& [e, x] : c) r.c.emplace(e, x / d);
        return r;
    }

    bool even_only() const {
        for (auto& [e, x] : c)
            if (e % 2 != 0) return false;
        return true;
    }

    Rat eval(const Rat& x) const {
        Rat s = 0;
        for (auto& [e, co] : c) s += Rat(co) * rat_pow(x, e);
        return s;
    }

    /// value with v^2 := q; requires even_only()
    Rat eval_even(const Rat& q) const {
        Rat s = 0;
        for (auto& [e, co] : c) {
            if (e % 2 != 0) throw odd_power_error("not a function of L");
            s += Rat(co) * rat_pow(q, e / 2);
        }
        return s;
    }

    /// Exact quotient by d; both must be true polynomials (min_exp >= 0 handled
    /// by the caller stripping shifts). Throws if the division is not exact.
    VPoly div_exact(const VPoly& d) const {
        if (d.zero()) throw std::domain_error("division by zero polynomial");
        if (zero()) return VPoly();
        std::map<int, Rat> rem;
        for (auto& [e, x] : c) rem[e] = Rat(x);
        VPoly q;
        Rat dl(d.lead());
        int dd = d.max_exp();
        while (!rem.empty() && rem.rbegin()->first >= dd) {
            int re = rem.rbegin()->first;
            Rat qc = rem.rbegin()->second / dl;
            int sh = re - dd;
            for (auto& [e, x] : d.c) {
                auto it = rem.find(e + sh);
                Rat nv = (it == rem.end() ? Rat(0) : it->second) - qc * Rat(x);
                if (nv == 0) {
                    if (it != rem.end()) rem.erase(it);
                } else {
                    rem[e + sh] = nv;
                }
            }
            if (denominator(qc) != 1) throw std::domain_error("inexact polynomial division");
            q.c[sh] = numerator(qc);
        }
        if (!rem.empty()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    /// gcd in Z[v] (content times primitive gcd), positive leading coefficient.
    /// Both inputs must have min_exp == 0 when nonzero.
    static VPoly gcd(const VPoly& a, const VPoly& b) {
        if (a.zero()) return normalize_sign(b);
        if (b.zero()) return normalize_sign(a);
        Int cg = int_gcd(a.content(), b.content());
        VPoly A = a.div_int(a.content());
        VPoly B = b.div_int(b.content());
        if (A.max_exp() < B.max_exp()) std::swap(A, B);
        while (!B.zero()) {
            VPoly R = prem(A, B);
            A = B;
            if (R.zero()) {
                B = R;
            } else {
                B = R.div_int(R.content()).shifted(-R.min_exp());
            }
        }
        A = normalize_sign(A);
        VPoly r;
        for (auto& [e, x] : A.c) r.c.emplace(e, x * cg);
        return r;
    }

    std::string str() const {
        if (zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            auto [e, x] = *it;
            Int ax = x < 0 ? Int(-x) : x;
            if (first) {
                if (x < 0) os << "-";
                first = false;
            } else {
                os << (x < 0 ? " - " : " + ");
            }
            if (e == 0) {
                os << ax.str();
            } else {
                if (ax != 1) os << ax.str() << "*";
                os << lhalf(e);
            }
        }
        return os.str();
    }

    /// v^e rendered in terms of L: even e -> integer power, odd e -> L^(e/2)
    static std::string lhalf(int e) {
        std::ostringstream os;
        if (e % 2 == 0) {
            int k = e / 2;
            if (k == 1) os << "L";
            else os << "L^" << (k >= 0 ? std::to_string(k) : "(" + std::to_string(k) + ")");
        } else {
            os << "L^(" << e << "/2)";
        }
        return os.str();
    }

private:
    static VPoly normalize_sign(VPoly p) {
        if (!p.zero() && p.lead() < 0) return -p;
        return p;
    }

    // pseudo-remainder of A by B (degrees as plain polynomials)
    static VPoly prem(VPoly A, const VPoly& B) {
        int db = B.max_exp();
        const Int& lb = B.lead();
        while (!A.zero() && A.max_exp() >= db) {
            Int la = A.lead();
            int sh = A.max_exp() - db;
            VPoly t;
            for (auto& [e, x] : A.c) t.c.emplace(e, x * lb);
            for (auto& [e, x] : B.c) {
                Int p = x * la;
                auto it = t.c.find(e + sh);
                if (it == t.c.end()) {
                    t.c.emplace(e + sh, -p);
                } else {
                    it->second -= p;
                    if (it->second == 0) t.c.erase(it);
                }
            }
            A = std::move(t);
        }
        return A;
    }
};

}  // namespace mdt
