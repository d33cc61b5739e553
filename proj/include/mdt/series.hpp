#pragma once

#include "mdt/motive.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <vector>

namespace mdt {

using Expo = std::vector<int>;

inline int expo_total(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Multivariate power series in y_0..y_{nvars-1} over MotiveRat, truncated at
/// total degree cap. Ring operations discard everything above the cap.
class Series {
public:
    Series(int nvars, int cap) : nvars_(nvars), cap_(cap) {
        if (nvars < 1 || cap < 0) throw invalid_input("bad series shape");
    }

    static Series one(int nvars, int cap) {
        Series s(nvars, cap);
        s.t_[Expo(nvars, 0)] = MotiveRat(1);
        return s;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Expo, MotiveRat>& terms() const { return t_; }

    MotiveRat coeff(const Expo& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? MotiveRat() : it->second;
    }
    MotiveRat constant_term() const { return coeff(Expo(nvars_, 0)); }

    void add_term(const Expo& e, const MotiveRat& c) {
        if (static_cast<int>(e.size()) != nvars_) throw invalid_input("exponent arity mismatch");
        if (c.zero() || expo_total(e) > cap_) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.zero()) t_.erase(it);
        }
    }

    Series operator+(const Series& o) const {
        check_shape(o);
        Series r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    Series operator-(const Series& o) const {
        check_shape(o);
        Series r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    Series operator*(const Series& o) const {
        check_shape(o);
        Series r(nvars_, cap_);
        for (auto& [e1, c1] : t_) {
            int d1 = expo_total(e1);
            for (auto& [e2, c2] : o.t_) {
                if (d1 + expo_total(e2) > cap_) continue;
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    Series operator*(const MotiveRat& c) const {
        Series r(nvars_, cap_);
        for (auto& [e, x] : t_) r.add_term(e, x * c);
        return r;
    }
    bool operator==(const Series& o) const {
        return nvars_ == o.nvars_ && cap_ == o.cap_ && t_ == o.t_;
    }

    bool zero() const { return t_.empty(); }

    Series pow(int k) const {
        Series r = one(nvars_, cap_);
        Series b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    /// multiplicative inverse; requires constant term 1
    Series inverse() const {
        require_constant(1, "inverse");
        Series b = one(nvars_, cap_) - *this;  // min degree >= 1
        Series acc = one(nvars_, cap_);
        Series p = one(nvars_, cap_);
        for (int k = 1; k <= cap_; ++k) {
            p = p * b;
            if (p.zero()) break;
            acc = acc + p;
        }
        return acc;
    }

    /// exp; requires constant term 0
    Series exp_t() const {
        require_constant(0, "exp");
        Series acc = one(nvars_, cap_);
        Series p = one(nvars_, cap_);
        for (int k = 1; k <= cap_; ++k) {
            p = (p * *this) * (MotiveRat(1) / MotiveRat(Int(k)));
            if (p.zero()) break;
            acc = acc + p;
        }
        return acc;
    }

    /// log; requires constant term 1
    Series log_t() const {
        require_constant(1, "log");
        Series b = *this - one(nvars_, cap_);
        Series acc(nvars_, cap_);
        Series p = one(nvars_, cap_);
        for (int k = 1; k <= cap_; ++k) {
            p = p * b;
            if (p.zero()) break;
            MotiveRat c = MotiveRat(Int(k % 2 == 1 ? 1 : -1)) / MotiveRat(Int(k));
            acc = acc + p * c;
        }
        return acc;
    }

    /// Adams operation psi_n: v -> v^n on coefficients, exponents scaled by n.
    Series psi(int n) const {
        Series r(nvars_, cap_);
        for (auto& [e, c] : t_) {
            if (n * expo_total(e) > cap_) continue;
            Expo ne(nvars_);
            for (int i = 0; i < nvars_; ++i) ne[i] = n * e[i];
            r.add_term(ne, c.adams(n));
        }
        return r;
    }

    /// Plethystic exponential Exp(F) = exp(sum_n psi_n(F)/n); constant term 0.
    Series pleth_exp() const {
        require_constant(0, "Exp");
        Series acc(nvars_, cap_);
        for (int n = 1; n <= cap_; ++n) {
            Series pn = psi(n);
            if (pn.zero()) continue;
            acc = acc + pn * (MotiveRat(1) / MotiveRat(Int(n)));
        }
        return acc.exp_t();
    }

    /// Plethystic logarithm, inverse of pleth_exp; constant term 1.
    Series pleth_log() const {
        require_constant(1, "Log");
        Series l = log_t();
        Series acc(nvars_, cap_);
        for (int n = 1; n <= cap_; ++n) {
            int mu = moebius(n);
            if (mu == 0) continue;
            Series pn = l.psi(n);
            if (pn.zero()) continue;
            acc = acc + pn * (MotiveRat(Int(mu)) / MotiveRat(Int(n)));
        }
        return acc;
    }

    /// y_var -> c * y_var
    Series scale_var(int var, const MotiveRat& c) const {
        Series r(nvars_, cap_);
        for (auto& [e, x] : t_) r.add_term(e, x * c.pow(e[var]));
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print by increasing total degree
        std::vector<const std::pair<const Expo, MotiveRat>*> ts;
        for (auto& kv : t_) ts.push_back(&kv);
        std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
            return expo_total(a->first) < expo_total(b->first);
        });
        for (auto* kv : ts) {
            if (!first) os << " + ";
            first = false;
            os << "(" << kv->second.str() << ")";
            for (int i = 0; i < nvars_; ++i) {
                if (kv->first[i] == 0) continue;
                os << "*y" << i;
                if (kv->first[i] > 1) os << "^" << kv->first[i];
            }
        }
        return os.str();
    }

    static int moebius(int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    }

private:
    void check_shape(const Series& o) const {
        if (nvars_ != o.nvars_ || cap_ != o.cap_)
            throw invalid_input("series shape mismatch");
    }
    void require_constant(long v, const char* what) const {
        if (constant_term() != MotiveRat(v))
            throw invalid_input(std::string(what) + " requires constant term " + std::to_string(v));
    }

    int nvars_, cap_;
    std::map<Expo, MotiveRat> t_;
};

}  // namespace mdt
