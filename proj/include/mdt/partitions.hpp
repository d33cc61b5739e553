#pragma once

#include "mdt/quiver.hpp"
#include "mdt/series.hpp"

#include <functional>

namespace mdt {

/// Integer partition stored by multiplicities: mult[i] = number of parts of
/// size i+1 (the paper's b_{i+1}).
struct Partition {
    std::vector<int> mult;

    Partition() = default;
    explicit Partition(std::vector<int> m) : mult(std::move(m)) { trim(); }

    void trim() {
        while (!mult.empty() && mult.back() == 0) mult.pop_back();
    }
    bool empty() const { return mult.empty(); }
    int b(int l) const { return (l >= 1 && l <= static_cast<int>(mult.size())) ? mult[l - 1] : 0; }

    int size() const {
        int s = 0;
        for (size_t i = 0; i < mult.size(); ++i) s += static_cast<int>(i + 1) * mult[i];
        return s;
    }
    int length() const {
        int s = 0;
        for (int m : mult) s += m;
        return s;
    }

    /// remove one box from each column: (1^{b1} 2^{b2} ...) -> (1^{b2} 2^{b3} ...)
    Partition prime() const {
        if (mult.empty()) return {};
        return Partition(std::vector<int>(mult.begin() + 1, mult.end()));
    }

    bool operator==(const Partition& o) const { return mult == o.mult; }

    static std::vector<Partition> all_of_size(int n) {
        std::vector<Partition> out;
        std::vector<int> m(n, 0);
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                out.emplace_back(m);
                return;
            }
            for (int l = std::min(left, maxpart); l >= 1; --l) {
                ++m[l - 1];
                rec(left - l, l);
                --m[l - 1];
            }
        };
        if (n == 0) {
            out.emplace_back(std::vector<int>{});
        } else {
            rec(n, n);
        }
        return out;
    }

    static std::vector<Partition> all_up_to(int n) {
        std::vector<Partition> out;
        for (int s = 0; s <= n; ++s)
            for (auto& p : all_of_size(s)) out.push_back(p);
        return out;
    }
};

/// M(pi, rho) = sum_{i>=1} (sum_{j>=i} b_j)(sum_{j>=i} c_j)
inline Int partition_M(const Partition& p, const Partition& q) {
    int n = static_cast<int>(std::max(p.mult.size(), q.mult.size()));
    Int s = 0, tp = 0, tq = 0;
    for (int i = n; i >= 1; --i) {
        tp += p.b(i);
        tq += q.b(i);
        s += tp * tq;
    }
    return s;
}

/// f(pi) = prod_l [End(b_l)]/[GL(b_l)] = prod_l L^(b_l^2)/[GL_{b_l}]
inline MotiveRat f_motive(const Partition& p) {
    MotiveRat r(1);
    for (int m : p.mult) {
        if (m == 0) continue;
        r *= MotiveRat(VPoly::v(2 * m * m), gl_order(m));
    }
    return r;
}

/// g(pi) = f(pi) * prod_l (-L^(1/2))^(-b_l^2)
inline MotiveRat g_motive(const Partition& p) {
    MotiveRat r = f_motive(p);
    for (int m : p.mult) {
        if (m == 0) continue;
        r *= MotiveRat::neg_v_pow(-m * m);
    }
    return r;
}

/// Exp(c * a/(1-t)) in variables (a, t), truncated at total degree cap.
inline Series partition_series_closed(const MotiveRat& c, int cap) {
    Series arg(2, cap);
    for (int m = 0; m + 1 <= cap; ++m) arg.add_term({1, m}, c);
    return arg.pleth_exp();
}

/// sum over partitions of h(pi) a^(l(pi)) t^(|pi|-l(pi)), |pi| <= cap
inline Series partition_series_sum(const std::function<MotiveRat(const Partition&)>& h, int cap) {
    Series s(2, cap);
    for (const Partition& p : Partition::all_up_to(cap))
        s.add_term({p.length(), p.size() - p.length()}, h(p));
    return s;
}

inline int cyc_dist(int a, int b, int N) { return ((b - a) % N + N) % N; }
inline bool in_cyc_interval(int i, int a, int b, int N) {
    return cyc_dist(a, i, N) <= cyc_dist(a, b, N);
}
inline int cyc_len(int a, int b, int N) { return cyc_dist(a, b, N) + 1; }

/// The special model: partition, vertex classes and the cut quiver together.
struct SpecialModel {
    int n0 = 1, n1 = 0, N = 1;
    SpecialClasses cls;
    SigmaPartition sigma;
    Quiver quiver;

    static SpecialModel make(int n0, int n1) {
        SpecialModel m{n0, n1, n0 + n1, SpecialClasses::make(n0, n1), special_sigma(n0, n1), {}};
        m.quiver = Quiver::build(m.sigma);
        m.quiver.apply_special_cut(m.cls);
        return m;
    }
};

/// N x N array of partitions indexed by the cyclic interval [a,b].
struct PartitionTuple {
    int N = 0;
    std::vector<Partition> pi;  // index a*N + b

    explicit PartitionTuple(int n) : N(n), pi(n * n) {}
    Partition& at(int a, int b) { return pi[a * N + b]; }
    const Partition& at(int a, int b) const { return pi[a * N + b]; }

    int total_boxes() const {
        int s = 0;
        for (const Partition& p : pi) s += p.size();
        return s;
    }
};

/// alpha_i = sum |pi^[a,b]| - sum_{[a,b] not covering i} l(pi^[a,b])
inline std::vector<int> dim_vector(const PartitionTuple& t) {
    int N = t.N;
    std::vector<int> alpha(N, 0);
    for (int i = 0; i < N; ++i) {
        int s = 0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                const Partition& p = t.at(a, b);
                if (p.empty()) continue;
                s += p.size();
                if (!in_cyc_interval(i, a, b, N)) s -= p.length();
            }
        alpha[i] = s;
    }
    return alpha;
}

/// dimension of the graded commutant block Hom(V^[a,b], V^[c,d])
inline Int B_dim(int N, int a, int b, int c, int d, const Partition& p, const Partition& q) {
    bool first_prime = cyc_dist(a, d, N) > cyc_dist(a, b, N);
    bool second_prime = !in_cyc_interval(a, c, d, N);
    return partition_M(first_prime ? p.prime() : p, second_prime ? q.prime() : q);
}

/// dimension of the corresponding block of relation-compatible maps L
inline Int T_dim(const SpecialModel& m, int a, int b, int c, int d,
                 const Partition& p, const Partition& q) {
    int N = m.N;
    int anchor = m.cls.in_I3(a) ? (a + N - 1) % N : a;
    int thr = cyc_dist(a, b, N);
    if (m.cls.in_I3(a)) thr += 1;
    if (m.cls.in_I2(b)) thr -= 1;
    bool first_prime = cyc_dist(anchor, d, N) > thr;
    bool second_prime = !in_cyc_interval(anchor, c, d, N);
    return partition_M(first_prime ? p.prime() : p, second_prime ? q.prime() : q);
}

/// Predicted T - B from the case table; zero outside the listed cases.
inline Int dif_predicted(const SpecialModel& m, int a, int b, int c, int d,
                         const Partition& p, const Partition& q) {
    int N = m.N;
    auto M = [&](bool pp, bool qp) {
        return partition_M(pp ? p.prime() : p, qp ? q.prime() : q);
    };
    int am1 = (a + N - 1) % N;
    if (!m.cls.in_I3(a)) {
        // case 1
        if (m.cls.in_I2(b) && d == b)
            return in_cyc_interval(a, c, b, N) ? M(true, false) - M(false, false)
                                               : M(true, true) - M(false, true);
        return 0;
    }
    if (!m.cls.in_I2(b)) {
        if (d == am1)  // case 2 (d = a-1 lies in I2 automatically)
            return a == c ? M(false, false) - M(true, false)
                          : M(false, false) - M(true, true);
        if (a == c)    // case 3
            return cyc_dist(a, d, N) <= cyc_dist(a, b, N)
                       ? M(false, true) - M(false, false)
                       : M(true, true) - M(true, false);
        return 0;
    }
    // a in I3, b in I2
    if (d == am1) {  // case 4
        if (a == c && b != d) return M(false, false) - M(true, false);
        if (a != c && b == d) return M(false, false) - M(false, true);
        if (a != c && b != d) return M(false, false) - M(true, true);
        return 0;
    }
    if (in_cyc_interval(am1, c, d, N)) {  // case 5
        if (b == d) return M(true, false) - M(false, false);
        return 0;
    }
    // a-1 not in [c,d]
    if (a == c && b == d) return M(true, true) - M(false, false);                       // case 7
    if (a == c && cyc_dist(a, d, N) < cyc_dist(a, b, N)) return M(false, true) - M(false, false);  // case 6
    if (a == c && cyc_dist(a, d, N) > cyc_dist(a, b, N)) return M(true, true) - M(true, false);    // case 7
    if (a != c && b == d) return M(true, true) - M(false, true);                        // case 7
    return 0;
}

/// Twice the closed-form value of T - B for a whole tuple.
inline Int twice_T_minus_B(const SpecialModel& m, const PartitionTuple& t) {
    int N = m.N;
    Int s = 0;
    for (int i = 0; i < N; ++i) {
        if (!m.cls.in_I2(i)) continue;
        long x = 0;
        int ip1 = (i + 1) % N;
        for (int b = 0; b < N; ++b)
            if (b != i) x += t.at(ip1, b).length();
        for (int c = 0; c < N; ++c)
            if (c != ip1) x -= t.at(c, i).length();
        s -= Int(x) * x;
    }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            bool inS = (m.cls.in_I3(a) && !m.cls.in_I2(b)) || (!m.cls.in_I3(a) && m.cls.in_I2(b));
            if (!inS) continue;
            for (int mm : t.at(a, b).mult) s -= Int(mm) * mm;
        }
    return s;
}

/// Enumerate all partition tuples whose dimension vector has total degree <= cap.
inline void enumerate_tuples(int N, int cap, const std::function<void(const PartitionTuple&)>& fn) {
    // the slot [a,b] contributes N(|pi|-l) + len(a,b) * l to the total degree
    std::vector<std::vector<Partition>> options(N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::vector<Partition>& opts = options[a * N + b];
            int len = cyc_len(a, b, N);
            for (const Partition& p : Partition::all_up_to(cap)) {
                int w = N * (p.size() - p.length()) + len * p.length();
                if (w <= cap) opts.push_back(p);
            }
        }
    PartitionTuple t(N);
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == N * N) {
            fn(t);
            return;
        }
        int a = slot / N, b = slot % N;
        int len = cyc_len(a, b, N);
        for (const Partition& p : options[slot]) {
            int w = N * (p.size() - p.length()) + len * p.length();
            if (w > left) continue;
            t.at(a, b) = p;
            rec(slot + 1, left - w);
        }
        t.at(a, b) = Partition();
    };
    rec(0, cap);
}

/// Nilpotent series assembled from the stratification: each tuple contributes
/// (-v)^(sum_{i in I2} (a_{i+1}-a_i)^2) * L^(T-B) * prod f(pi) * y^alpha.
inline Series n_sigma_via_partitions(const SpecialModel& m, int cap) {
    int N = m.N;
    Series out(N, cap);
    enumerate_tuples(N, cap, [&](const PartitionTuple& t) {
        std::vector<int> alpha = dim_vector(t);
        if (expo_total(alpha) > cap) return;
        long E = 0;
        for (int i = 0; i < N; ++i)
            if (m.cls.in_I2(i)) {
                long d = alpha[(i + 1) % N] - alpha[i];
                E += d * d;
            }
        Int s2 = twice_T_minus_B(m, t);
        if (s2 % 2 != 0) throw std::logic_error("T - B is not an integer");
        MotiveRat coeff = MotiveRat::v_pow(static_cast<int>(E) + static_cast<int>(s2));
        if (E % 2 != 0) coeff = -coeff;
        for (const Partition& p : t.pi) coeff *= f_motive(p);
        out.add_term(alpha, coeff);
    });
    return out;
}

/// N^sigma = Exp( L/(L-1) * 1/(1-y') * (sum_{[a,b] not in S} y_[a,b]
///                                      - L^(-1/2) sum_{[a,b] in S} y_[a,b]) )
inline Series n_sigma_closed(const SpecialModel& m, int cap) {
    int N = m.N;
    MotiveRat base(VPoly::v(2), VPoly::v(2) - VPoly(1));   // L/(L-1)
    Series arg(N, cap);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            bool inS = (m.cls.in_I3(a) && !m.cls.in_I2(b)) || (!m.cls.in_I3(a) && m.cls.in_I2(b));
            MotiveRat c = inS ? base * MotiveRat(-VPoly::v(-1)) : base;
            int len = cyc_len(a, b, N);
            for (int mm = 0; len + mm * N <= cap; ++mm) {
                Expo e(N, mm);
                for (int i = 0; i < len; ++i) e[(a + i) % N] += 1;
                arg.add_term(e, c);
            }
        }
    return arg.pleth_exp();
}

/// I^sigma(y) = Exp(L y/(1-y)), one variable.
inline Series i_sigma_closed(int cap) {
    Series arg(1, cap);
    for (int mm = 1; mm <= cap; ++mm) arg.add_term({mm}, MotiveRat::L_pow(1));
    return arg.pleth_exp();
}

}  // namespace mdt
