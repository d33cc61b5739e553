#pragma once

#include "mdt/roots.hpp"
#include "mdt/series.hpp"

namespace mdt {

/// Exp-argument coefficient of the per-root factor A^alpha.
inline MotiveRat root_factor_arg(RootKind kind, int N) {
    VPoly den = VPoly::v(2) - VPoly(1);  // v^2 - 1
    switch (kind) {
        case RootKind::RealOdd:
            return MotiveRat(-VPoly::v(1), den);                     // -L^(1/2)/(1-L^(-1))
        case RootKind::RealEven:
            return MotiveRat(VPoly::v(2), den);                      // 1/(1-L^(-1))
        case RootKind::Imaginary:
            return MotiveRat(VPoly::v(2) * (VPoly::v(2) + VPoly(N - 1)), den);
    }
    throw std::logic_error("unreachable");
}

/// Coefficients of A^alpha as a one-variable series in x = y^alpha.
inline Series root_factor_1var(RootKind kind, int N, int cap) {
    Series arg(1, cap);
    arg.add_term({1}, root_factor_arg(kind, N));
    return arg.pleth_exp();
}

/// (1 - c x^step)^power expanded to the cap.
inline Series binomial_factor(int cap, int step, const MotiveRat& c, int power) {
    Series r(1, cap);
    r.add_term({0}, MotiveRat(1));
    if (power == 0) return r;
    auto choose = [](long n, long k) {
        Int b = 1;
        for (long i = 1; i <= k; ++i) {
            b *= (n - k + i);
            b /= i;
        }
        return b;
    };
    int kmax = cap / step;
    if (power > 0) kmax = std::min(kmax, power);
    MotiveRat cp(1);
    for (int k = 1; k <= kmax; ++k) {
        cp *= c;
        Int binom = power > 0 ? choose(power, k) : choose(-power + k - 1, k);
        MotiveRat coeff = MotiveRat(binom) * cp;
        if (power > 0 && k % 2 == 1) coeff = -coeff;
        r.add_term({k * step}, coeff);
    }
    return r;
}

/// Embed a one-variable series in x = y^base into the N-variable ring.
inline Series embed(const Series& one_var, int nvars, int cap, const Expo& base) {
    Series r(nvars, cap);
    for (auto& [e, c] : one_var.terms()) {
        Expo ne(nvars);
        for (int i = 0; i < nvars; ++i) ne[i] = e[0] * base[i];
        r.add_term(ne, c);
    }
    return r;
}

inline Series root_factor(const Root& r, int N, int cap) {
    int d = r.degree();
    return embed(root_factor_1var(r.kind, N, cap / d), N, cap, r.coords);
}

/// A_U = product of A^alpha over all positive roots of degree <= cap.
inline Series universal_series(const SigmaPartition& sigma, int cap) {
    int N = sigma.N();
    Series acc = Series::one(N, cap);
    for (const Root& r : enumerate_positive_roots(N, sigma, cap))
        acc = acc * root_factor(r, N, cap);
    return acc;
}

/// Same series assembled as a single Exp over the root classes.
inline Series universal_series_closing(const SigmaPartition& sigma, int cap) {
    int N = sigma.N();
    Series arg(N, cap);
    for (const Root& r : enumerate_positive_roots(N, sigma, cap))
        arg.add_term(r.coords, root_factor_arg(r.kind, N));
    return arg.pleth_exp();
}

/// E(y) = sum_n (-v)^(n^2)/[GL_n] y^n
inline Series quantum_exp_E(int cap) {
    Series r(1, cap);
    for (int n = 0; n <= cap; ++n) {
        MotiveRat c = MotiveRat::neg_v_pow(n * n) / MotiveRat(gl_order(n));
        r.add_term({n}, c);
    }
    return r;
}

/// Z_alpha as a one-variable series in x = y^alpha via the defining ratio
/// A^alpha(-L^(1/2) y_0, ...) / A^alpha(-L^(-1/2) y_0, ...).
inline Series z_alpha_1var(const Root& r, int N, int cap) {
    Series a = root_factor_1var(r.kind, N, cap);
    int a0 = r.coords[0];
    Series num = a.scale_var(0, MotiveRat::neg_v_pow(a0));
    Series den = a.scale_var(0, MotiveRat::neg_v_pow(-a0));
    return num * den.inverse();
}

/// Closed finite-product form, in the paper's convention Z_alpha(-y_0, ...).
inline Series z_alpha_closed_1var(const Root& r, int N, int cap) {
    int a0 = r.coords[0];
    Series acc = Series::one(1, cap);
    for (int i = 0; i < a0; ++i) {
        if (r.kind == RootKind::RealOdd) {
            acc = acc * binomial_factor(cap, 1, MotiveRat::v_pow(-a0 + 1 + 2 * i), 1);
        } else if (r.kind == RootKind::RealEven) {
            acc = acc * binomial_factor(cap, 1, MotiveRat::v_pow(-a0 + 2 + 2 * i), -1);
        } else {
            acc = acc * binomial_factor(cap, 1, MotiveRat::v_pow(-a0 + 2 + 2 * i), 1 - N);
            acc = acc * binomial_factor(cap, 1, MotiveRat::v_pow(-a0 + 4 + 2 * i), -1);
        }
    }
    return acc;
}

/// Closed form rewritten in the plain convention Z_alpha(y_0, ...).
inline Series z_alpha_closed_raw_1var(const Root& r, int N, int cap) {
    Series z = z_alpha_closed_1var(r, N, cap);
    if (r.coords[0] % 2 == 0) return z;
    return z.scale_var(0, MotiveRat(-1));
}

inline Series z_alpha(const Root& r, int N, int cap) {
    return embed(z_alpha_1var(r, N, cap / r.degree()), N, cap, r.coords);
}

/// Z_zeta = product of Z_alpha over roots with zeta . alpha < 0.
inline Series z_zeta(const SigmaPartition& sigma, const StabilityParam& zeta, int cap) {
    int N = sigma.N();
    auto roots = enumerate_positive_roots(N, sigma, cap);
    for (const Root& r : roots)
        if (zeta.orthogonal_to(r.coords))
            throw nongeneric_error("stability parameter orthogonal to a root", r.coords);
    Series acc = Series::one(N, cap);
    for (const Root& r : roots)
        if (zeta.negative_on(r.coords)) acc = acc * z_alpha(r, N, cap);
    return acc;
}

enum class DTKind { DT, PT, ZeroDim };

/// DT / PT / 0-dimensional series in the y-variables, assembled from the
/// closed product forms: imaginary roots give Z_im, the families
/// alpha_[a,b] + n delta give Z_[a,b].
inline Series dtpt_series(const SigmaPartition& sigma, DTKind which, int cap) {
    int N = sigma.N();
    Series acc = Series::one(N, cap);
    for (const Root& r : enumerate_positive_roots(N, sigma, cap)) {
        bool take = r.imaginary ? (which != DTKind::PT)
                                : (which != DTKind::ZeroDim && r.sign > 0);
        if (take) acc = acc * embed(z_alpha_closed_raw_1var(r, N, cap / r.degree()), N, cap, r.coords);
    }
    return acc;
}

/// Z_im as a one-variable series in s (s-degree cap), for specialization checks.
inline Series z_im_series(int N, int s_cap) {
    Series acc = Series::one(1, s_cap);
    for (int n = 1; n <= s_cap; ++n) {
        int sgn = n % 2 == 0 ? 1 : -1;  // (-s)^n
        for (int i = 0; i < n; ++i) {
            acc = acc * binomial_factor(s_cap, n, MotiveRat(Int(sgn)) * MotiveRat::v_pow(-n + 2 + 2 * i), 1 - N);
            acc = acc * binomial_factor(s_cap, n, MotiveRat(Int(sgn)) * MotiveRat::v_pow(-n + 4 + 2 * i), -1);
        }
    }
    return acc;
}

/// Exact term-wise substitution v -> 1; throws pole_error if any coefficient
/// has a pole there (the stack series A_U does).
inline Series euler_specialize(const Series& s) {
    Series r(s.nvars(), s.cap());
    for (auto& [e, c] : s.terms()) r.add_term(e, MotiveRat(c.eval_v(Rat(1))));
    return r;
}

/// Exponents re-expressed in (s, T_1..T_{N-1}): s-degree is the delta
/// multiplicity (the y_0 exponent), T_i-degree is e_i - e_0.
struct STTerm {
    int s = 0;
    std::vector<int> T;
    MotiveRat coeff;
};

inline std::vector<STTerm> to_sT(const Series& s) {
    std::vector<STTerm> out;
    for (auto& [e, c] : s.terms()) {
        STTerm t;
        t.s = e[0];
        t.T.assign(e.begin() + 1, e.end());
        for (int& x : t.T) {
            x -= t.s;
            if (x < 0) throw std::logic_error("negative curve-class exponent");
        }
        t.coeff = c;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace mdt
