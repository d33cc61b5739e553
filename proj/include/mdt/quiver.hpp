#pragma once

#include "mdt/sigma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mdt {

struct Arrow {
    std::string name;
    int src = 0, dst = 0;
};

/// A path stored in application order: the first arrow acts first.
using Path = std::vector<int>;

/// Jacobian relation dW/da as a signed pair of composable paths (plus - minus).
struct Relation {
    int arrow = -1;
    Path plus, minus;
};

/// The quiver Q_sigma: vertices Z/N, arrows h+_{k+1/2}: k -> k+1,
/// h-_{k+1/2}: k+1 -> k and loops r_k for k in the loop set, together with the
/// cyclic-derivative relations and (optionally) a cut.
class Quiver {
public:
    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<int> hp, hm;          // arrow id of h+/- indexed by the lower vertex k
    std::vector<int> loop_arrow;      // arrow id of r_k, or -1
    std::vector<bool> in_cut;
    std::vector<Relation> relations;  // indexed by arrow id

    static Quiver build(const SigmaPartition& sigma) {
        Quiver q;
        int N = sigma.N();
        q.n = N;
        q.hp.resize(N);
        q.hm.resize(N);
        q.loop_arrow.assign(N, -1);
        auto loops = sigma.loop_set();
        auto half = [](int k) { return std::to_string(2 * k + 1) + "/2"; };
        for (int k = 0; k < N; ++k) {
            q.hp[k] = static_cast<int>(q.arrows.size());
            q.arrows.push_back({"h+_" + half(k), k, (k + 1) % N});
        }
        for (int k = 0; k < N; ++k) {
            q.hm[k] = static_cast<int>(q.arrows.size());
            q.arrows.push_back({"h-_" + half(k), (k + 1) % N, k});
        }
        for (int k = 0; k < N; ++k) {
            if (loops.count(k)) {
                q.loop_arrow[k] = static_cast<int>(q.arrows.size());
                q.arrows.push_back({"r_" + std::to_string(k), k, k});
            }
        }
        q.in_cut.assign(q.arrows.size(), false);
        q.relations.resize(q.arrows.size());
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
            q.relations[a] = q.relation_for(a);
        return q;
    }

    bool has_loop(int v) const { return loop_arrow[v] >= 0; }

    /// epsilon_k: r_k, or h+_{k-1/2} h-_{k-1/2} (as an application-ordered path)
    Path eps(int k) const {
        if (has_loop(k)) return {loop_arrow[k]};
        int j = (k + n - 1) % n;
        return {hm[j], hp[j]};
    }
    /// eta_k: r_k, or h-_{k+1/2} h+_{k+1/2}
    Path eta(int k) const {
        if (has_loop(k)) return {loop_arrow[k]};
        return {hp[k], hm[k]};
    }

    Relation relation_for(int a) const {
        Relation rel;
        rel.arrow = a;
        for (int k = 0; k < n; ++k) {
            if (a == hm[k]) {
                // dW/dh-_i = h+_i o eps_{i-1/2} - eta_{i+1/2} o h+_i
                rel.plus = eps(k);
                rel.plus.push_back(hp[k]);
                rel.minus = {hp[k]};
                Path e = eta((k + 1) % n);
                rel.minus.insert(rel.minus.end(), e.begin(), e.end());
                return rel;
            }
            if (a == hp[k]) {
                // dW/dh+_i = eps_{i-1/2} o h-_i - h-_i o eta_{i+1/2}
                rel.plus = {hm[k]};
                Path e = eps(k);
                rel.plus.insert(rel.plus.end(), e.begin(), e.end());
                rel.minus = eta((k + 1) % n);
                rel.minus.push_back(hm[k]);
                return rel;
            }
            if (a == loop_arrow[k]) {
                // dW/dr_k = h+_{k-1/2} o h-_{k-1/2} - h-_{k+1/2} o h+_{k+1/2}
                int j = (k + n - 1) % n;
                rel.plus = {hm[j], hp[j]};
                rel.minus = {hp[k], hm[k]};
                return rel;
            }
        }
        throw invalid_input("unknown arrow");
    }

    /// Cut validity: relations of cut arrows avoid the cut entirely; every
    /// monomial of any other relation meets the cut exactly once.
    bool cut_is_valid() const {
        auto cut_count = [&](const Path& p) {
            int c = 0;
            for (int a : p) c += in_cut[a] ? 1 : 0;
            return c;
        };
        for (const Relation& rel : relations) {
            int want = in_cut[rel.arrow] ? 0 : 1;
            if (cut_count(rel.plus) != want || cut_count(rel.minus) != want) return false;
        }
        return true;
    }

    /// Default cut per the odd/even grouping of arrows around the cycle:
    /// groups ([r_0], pair_{1/2}, [r_1], pair_{3/2}, ...) labelled alternately
    /// starting odd; each odd group contributes h-_i (pairs) or r_k.
    void apply_default_cut() {
        std::fill(in_cut.begin(), in_cut.end(), false);
        bool odd = true;
        for (int k = 0; k < n; ++k) {
            if (has_loop(k)) {
                if (odd) in_cut[loop_arrow[k]] = true;
                odd = !odd;
            }
            if (odd) in_cut[hm[k]] = true;
            odd = !odd;
        }
        if (!cut_is_valid()) throw std::logic_error("internal error: constructed cut is invalid");
    }

    /// Same grouping, picking from the even-labelled groups instead.
    void apply_alternate_cut() {
        std::fill(in_cut.begin(), in_cut.end(), false);
        bool odd = true;
        for (int k = 0; k < n; ++k) {
            if (has_loop(k)) {
                if (!odd) in_cut[loop_arrow[k]] = true;
                odd = !odd;
            }
            if (!odd) in_cut[hm[k]] = true;
            odd = !odd;
        }
        if (!cut_is_valid()) throw std::logic_error("internal error: constructed cut is invalid");
    }

    /// Cut of the special partition: C = { h-_i | i-1/2 not in I2 }.
    void apply_special_cut(const SpecialClasses& cls) {
        std::fill(in_cut.begin(), in_cut.end(), false);
        for (int k = 0; k < n; ++k)
            if (!cls.in_I2(k)) in_cut[hm[k]] = true;
        if (!cut_is_valid()) throw std::logic_error("internal error: special cut is invalid");
    }

    long euler_form(const std::vector<int>& alpha, const std::vector<int>& beta) const {
        if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
            throw invalid_input("dimension vector length mismatch");
        long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long>(alpha[i]) * beta[i];
        for (const Arrow& a : arrows) s -= static_cast<long>(alpha[a.src]) * beta[a.dst];
        return s;
    }

    long d_C(const std::vector<int>& alpha) const {
        long s = 0;
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
            if (in_cut[a]) s += static_cast<long>(alpha[arrows[a].src]) * alpha[arrows[a].dst];
        return s;
    }

    std::vector<int> cut_arrows() const {
        std::vector<int> c;
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
            if (in_cut[a]) c.push_back(a);
        return c;
    }
};

}  // namespace mdt
