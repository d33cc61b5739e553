#pragma once

#include "mdt/linrank.hpp"
#include "mdt/partitions.hpp"

#include <map>

namespace mdt {

/// The graded C[x]-module V^[a,b] of type pi: the part of size l is the cyclic
/// string C[x]/(x^(N(l-1)+|b-a|+1)) generated at vertex a; H shifts along each
/// string, the basis vector at step p sits at vertex a+p.
struct GradedModule {
    int N = 0, a = 0, b = 0;
    int dim = 0;
    std::vector<int> vertex;  // per basis index
    std::vector<int> hnext;   // H image index, -1 at the top
    std::vector<int> hprev;   // H preimage index, -1 at the bottom

    static GradedModule make(int N, int a, int b, const Partition& pi) {
        GradedModule g;
        g.N = N;
        g.a = a;
        g.b = b;
        int dist = cyc_dist(a, b, N);
        for (int l = 1; l <= static_cast<int>(pi.mult.size()); ++l) {
            int len = N * (l - 1) + dist + 1;
            for (int k = 0; k < pi.b(l); ++k) {
                int base = g.dim;
                for (int p = 0; p < len; ++p) {
                    g.vertex.push_back((a + p) % N);
                    g.hnext.push_back(p + 1 < len ? base + p + 1 : -1);
                    g.hprev.push_back(p > 0 ? base + p - 1 : -1);
                    ++g.dim;
                }
            }
        }
        return g;
    }
};

namespace detail {

struct VarKey {
    int u, w;
    bool operator<(const VarKey& o) const { return std::tie(u, w) < std::tie(o.u, o.w); }
};

}  // namespace detail

/// Exact-rank computation of (T, B) for one block pair: B counts graded maps
/// commuting with H, T counts maps L = (r_i, h^-) satisfying the truncated
/// Jacobian relations against the fixed H matrix.
inline std::pair<int, int> linear_algebra_dims(const SpecialModel& m, int a, int b, int c, int d,
                                               const Partition& pa, const Partition& pc,
                                               int box_cap = 8) {
    if (pa.size() + pc.size() > box_cap)
        throw invalid_input("linear_algebra_dims: box cap exceeded");
    int N = m.N;
    GradedModule X = GradedModule::make(N, a, b, pa);
    GradedModule Y = GradedModule::make(N, c, d, pc);

    // ---- B: vertex-preserving maps with n H = H n ----
    int Bdim = 0;
    {
        std::map<detail::VarKey, int> var;
        for (int u = 0; u < X.dim; ++u)
            for (int w = 0; w < Y.dim; ++w)
                if (X.vertex[u] == Y.vertex[w]) var[{u, w}] = static_cast<int>(var.size());
        std::vector<std::vector<Int>> rows;
        for (int u = 0; u < X.dim; ++u)
            for (int w = 0; w < Y.dim; ++w) {
                std::vector<Int> row(var.size(), 0);
                bool any = false;
                // (n Hu)[w]
                if (X.hnext[u] >= 0 && X.vertex[X.hnext[u]] == Y.vertex[w]) {
                    row[var[{X.hnext[u], w}]] += 1;
                    any = true;
                }
                // (H n u)[w] = n(u)[w'] with H w' = w
                if (Y.hprev[w] >= 0 && X.vertex[u] == Y.vertex[Y.hprev[w]]) {
                    row[var[{u, Y.hprev[w]}]] -= 1;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        Bdim = static_cast<int>(var.size()) - int_matrix_rank(std::move(rows));
    }

    // ---- T: L-maps against the cut-arrow relations ----
    int Tdim = 0;
    {
        // allowed (source vertex, target vertex) pairs of L components
        std::map<std::pair<int, int>, bool> allowed;
        for (int v = 0; v < N; ++v) {
            if (m.cls.in_I1(v)) allowed[{v, v}] = true;
            if (m.cls.in_I2(v)) allowed[{(v + 1) % N, v}] = true;
        }
        std::map<detail::VarKey, int> var;
        for (int u = 0; u < X.dim; ++u)
            for (int w = 0; w < Y.dim; ++w)
                if (allowed.count({X.vertex[u], Y.vertex[w]}))
                    var[{u, w}] = static_cast<int>(var.size());

        // a path applied to u yields +-1 coefficients on variables, indexed by
        // the final Y-basis position
        auto eval_path = [&](const Path& path, int u) {
            std::map<int, detail::VarKey> pending;  // current Y position -> variable
            int cur = u;
            bool in_x = true, dead = false;
            for (int aid : path) {
                const Arrow& ar = m.quiver.arrows[aid];
                bool is_h_plus = aid == m.quiver.hp[ar.src];
                if (dead) break;
                if (in_x) {
                    if (X.vertex[cur] != ar.src) throw std::logic_error("path/vertex mismatch");
                    if (is_h_plus) {
                        cur = X.hnext[cur];
                        if (cur < 0) dead = true;
                    } else {
                        for (int w = 0; w < Y.dim; ++w)
                            if (Y.vertex[w] == ar.dst && var.count({cur, w}))
                                pending[w] = {cur, w};
                        in_x = false;
                    }
                } else {
                    if (!is_h_plus) throw std::logic_error("second L-arrow in a relation word");
                    std::map<int, detail::VarKey> next;
                    for (auto& [w, key] : pending)
                        if (Y.hnext[w] >= 0) next[Y.hnext[w]] = key;
                    pending = std::move(next);
                }
            }
            if (dead || in_x) pending.clear();
            return pending;
        };

        std::vector<std::vector<Int>> rows;
        for (int aid : m.quiver.cut_arrows()) {
            const Relation& rel = m.quiver.relations[aid];
            int src = m.quiver.arrows[rel.plus.front()].src;
            for (int u = 0; u < X.dim; ++u) {
                if (X.vertex[u] != src) continue;
                auto plus = eval_path(rel.plus, u);
                auto minus = eval_path(rel.minus, u);
                std::map<int, std::map<int, Int>> eq;  // y-basis -> var -> coeff
                for (auto& [w, key] : plus) eq[w][var[key]] += 1;
                for (auto& [w, key] : minus) eq[w][var[key]] -= 1;
                for (auto& [w, m2] : eq) {
                    std::vector<Int> row(var.size(), 0);
                    bool any = false;
                    for (auto& [vi, cf] : m2)
                        if (cf != 0) { row[vi] = cf; any = true; }
                    if (any) rows.push_back(std::move(row));
                }
            }
        }
        Tdim = static_cast<int>(var.size()) - int_matrix_rank(std::move(rows));
    }

    return {Tdim, Bdim};
}

}  // namespace mdt
