#pragma once

#include "mdt/sigma.hpp"

#include <optional>
#include <vector>

namespace mdt {

enum class RootKind { RealOdd, RealEven, Imaginary };

/// Positive root of the N-vertex affine type-A system with its normal form:
/// imaginary n*delta, or sign*alpha_[a,b] + n*delta with 1 <= a <= b <= N-1.
struct Root {
    std::vector<int> coords;
    RootKind kind = RootKind::Imaginary;
    bool imaginary = true;
    int n = 0;          // delta multiplicity
    int a = 0, b = 0;   // finite part interval (real roots)
    int sign = 0;       // +1 / -1 (real roots)

    int degree() const {
        int d = 0;
        for (int x : coords) d += x;
        return d;
    }
};

/// Parity of sum of coordinates over vertices without loops. Real roots only.
inline int parity(const SigmaPartition& sigma, const std::vector<int>& coords) {
    auto loops = sigma.loop_set();
    long s = 0;
    for (int k = 0; k < sigma.N(); ++k)
        if (!loops.count(k)) s += coords[k];
    return static_cast<int>(s % 2);
}

inline RootKind classify_real(const SigmaPartition& sigma, const std::vector<int>& coords) {
    return parity(sigma, coords) == 1 ? RootKind::RealOdd : RootKind::RealEven;
}

/// Recover the normal form from coordinates; nullopt if not a positive root.
inline std::optional<Root> root_from_coords(const std::vector<int>& coords) {
    int N = static_cast<int>(coords.size());
    int mn = coords[0], mx = coords[0];
    for (int x : coords) { mn = std::min(mn, x); mx = std::max(mx, x); }
    if (mn < 0) return std::nullopt;
    Root r;
    r.coords = coords;
    if (mn == mx) {
        if (mn <= 0) return std::nullopt;
        r.imaginary = true;
        r.n = mn;
        r.kind = RootKind::Imaginary;
        return r;
    }
    if (mx - mn != 1) return std::nullopt;
    auto interval_of = [&](int value) -> std::optional<std::pair<int, int>> {
        // the set {i : coords[i] == value} as an interval inside {1..N-1}
        if (coords[0] == value) return std::nullopt;
        int a = -1, b = -1;
        for (int i = 1; i < N; ++i) {
            if (coords[i] == value) {
                if (a < 0) a = i;
                else if (coords[i - 1] != value) return std::nullopt;  // gap
                b = i;
            }
        }
        if (a < 0) return std::nullopt;
        for (int i = a; i <= b; ++i)
            if (coords[i] != value) return std::nullopt;
        return std::make_pair(a, b);
    };
    if (auto iv = interval_of(mx)) {
        r.imaginary = false;
        r.sign = +1;
        r.a = iv->first;
        r.b = iv->second;
        r.n = mn;
        return r;
    }
    if (auto iv = interval_of(mn)) {
        if (mx < 1) return std::nullopt;
        r.imaginary = false;
        r.sign = -1;
        r.a = iv->first;
        r.b = iv->second;
        r.n = mx;
        return r;
    }
    return std::nullopt;
}

/// All positive roots of total degree <= D, kinds classified relative to sigma.
inline std::vector<Root> enumerate_positive_roots(int N, const SigmaPartition& sigma, int D) {
    std::vector<Root> out;
    auto push = [&](std::vector<int> c, bool im, int n, int a, int b, int sg) {
        Root r;
        r.coords = std::move(c);
        r.imaginary = im;
        r.n = n;
        r.a = a;
        r.b = b;
        r.sign = sg;
        r.kind = im ? RootKind::Imaginary : classify_real(sigma, r.coords);
        out.push_back(std::move(r));
    };
    for (int n = 1; n * N <= D; ++n)
        push(std::vector<int>(N, n), true, n, 0, 0, 0);
    for (int a = 1; a < N; ++a)
        for (int b = a; b < N; ++b) {
            int len = b - a + 1;
            for (int n = 0; len + n * N <= D; ++n) {
                std::vector<int> c(N, n);
                for (int i = a; i <= b; ++i) c[i] = n + 1;
                push(std::move(c), false, n, a, b, +1);
            }
            for (int n = 1; n * N - len <= D; ++n) {
                std::vector<int> c(N, n);
                for (int i = a; i <= b; ++i) c[i] = n - 1;
                push(std::move(c), false, n, a, b, -1);
            }
        }
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return x.coords < y.coords;
    });
    return out;
}

/// Affine type-A Cartan matrix: 2 on the diagonal, -1 per cyclic adjacency
/// (doubled for N = 2, vanishing for N = 1).
inline std::vector<std::vector<int>> cartan_matrix(int N) {
    std::vector<std::vector<int>> C(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i) {
        C[i][i] = 2;
        C[i][(i + 1) % N] -= 1;
        C[i][(i + N - 1) % N] -= 1;
    }
    return C;
}

/// Simple reflection s_k on the root lattice written in the simple-root basis:
/// only the k-th coordinate moves, by -sum_i C_{ik} x_i.
inline std::vector<int> simple_reflection(int N, int k, const std::vector<int>& x) {
    if (k < 0 || k >= N) throw invalid_input("reflection vertex out of range");
    auto C = cartan_matrix(N);
    long s = 0;
    for (int i = 0; i < N; ++i) s += static_cast<long>(C[i][k]) * x[i];
    std::vector<int> y = x;
    y[k] = x[k] - static_cast<int>(s);
    return y;
}

struct CurveClass {
    int n = 0;                       // point multiplicity
    std::optional<std::pair<int, int>> interval;
    int c = 0;                       // number of (-1,-1)-curves in the interval
};

inline CurveClass curve_class(const SigmaPartition& sigma, const Root& r) {
    CurveClass cc;
    cc.n = r.n;
    if (r.imaginary) return cc;
    cc.interval = std::make_pair(r.a, r.b);
    auto loops = sigma.loop_set();
    for (int i = r.a; i <= r.b; ++i)
        if (!loops.count(i)) ++cc.c;
    return cc;
}

/// Stability parameter with an exact infinitesimal part: the pairing with a
/// root is the lexicographic pair (base . alpha, eps . alpha).
struct StabilityParam {
    std::vector<Rat> base, eps;

    std::pair<Rat, Rat> pair_with(const std::vector<int>& coords) const {
        Rat b = 0, e = 0;
        for (size_t i = 0; i < coords.size(); ++i) {
            b += base[i] * coords[i];
            if (!eps.empty()) e += eps[i] * coords[i];
        }
        return {b, e};
    }

    bool negative_on(const std::vector<int>& coords) const {
        auto [b, e] = pair_with(coords);
        return b < 0 || (b == 0 && e < 0);
    }

    bool orthogonal_to(const std::vector<int>& coords) const {
        auto [b, e] = pair_with(coords);
        return b == 0 && e == 0;
    }
};

inline bool is_generic(const StabilityParam& z, const std::vector<Root>& roots) {
    for (const Root& r : roots)
        if (z.orthogonal_to(r.coords)) return false;
    return true;
}

/// Chamber representatives realizing the DT / PT / NCDT module counts:
/// the base pairs to zero exactly on delta and negatively on every
/// alpha_[a,b] + n*delta; the infinitesimal decides the imaginary roots
/// (included for DT, excluded for PT).
inline StabilityParam zeta_dt(int N) {
    StabilityParam z;
    z.base.assign(N, Rat(-1));
    z.base[0] = Rat(N - 1);
    z.eps.assign(N, Rat(0));
    z.eps[0] = Rat(-1);
    return z;
}

inline StabilityParam zeta_pt(int N) {
    StabilityParam z = zeta_dt(N);
    z.eps[0] = Rat(1);
    return z;
}

inline StabilityParam zeta_ncdt(int N) {
    StabilityParam z;
    z.base.assign(N, Rat(-1));
    z.eps.assign(N, Rat(0));
    return z;
}

}  // namespace mdt
