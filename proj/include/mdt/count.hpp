#pragma once

#include "mdt/quiver.hpp"

#include <cstdint>
#include <thread>

namespace mdt {

struct CountResult {
    std::vector<int> alpha;
    int prime = 0;
    Int count = 0;
};

namespace detail {

struct Cell {
    int arrow = 0, rows = 0, cols = 0, offset = 0;
};

struct FpMat {
    int r = 0, c = 0;
    const int* a = nullptr;           // borrowed, row-major
    std::vector<int> own;             // for products

    int at(int i, int j) const { return a[i * c + j]; }
};

inline FpMat mat_mul(const FpMat& A, const FpMat& B, int p) {
    // A: r x c applied after B: B.r x B.c with A.c == B.r
    FpMat R;
    R.r = A.r;
    R.c = B.c;
    R.own.assign(static_cast<size_t>(R.r) * R.c, 0);
    for (int i = 0; i < A.r; ++i)
        for (int k = 0; k < A.c; ++k) {
            int aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.c; ++j)
                R.own[i * R.c + j] = (R.own[i * R.c + j] + aik * B.at(k, j)) % p;
        }
    R.a = R.own.data();
    return R;
}

}  // namespace detail

/// Exhaustive count of Q_C-representations over F_p on which the relation
/// word of every cut arrow vanishes. The search space is partitioned into
/// index ranges handled by independent workers; the total is their sum.
inline CountResult count_representations(const Quiver& q, const std::vector<int>& alpha,
                                         int p, const Int& budget = Int(100000000),
                                         int workers = 0) {
    if (static_cast<int>(alpha.size()) != q.n) throw invalid_input("alpha length mismatch");
    for (int x : alpha)
        if (x < 0) throw invalid_input("alpha must be non-negative");

    std::vector<detail::Cell> cells;
    int total_cells = 0;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        if (q.in_cut[a]) continue;
        detail::Cell c;
        c.arrow = a;
        c.rows = alpha[q.arrows[a].dst];
        c.cols = alpha[q.arrows[a].src];
        c.offset = total_cells;
        total_cells += c.rows * c.cols;
        cells.push_back(c);
    }
    Int space = int_pow(Int(p), static_cast<unsigned>(total_cells));
    if (space > budget)
        throw budget_error("search space " + space.str() + " exceeds budget " + budget.str(), space);
    std::uint64_t n = space.convert_to<std::uint64_t>();

    std::vector<int> arrow_cell(q.arrows.size(), -1);
    for (size_t i = 0; i < cells.size(); ++i) arrow_cell[cells[i].arrow] = static_cast<int>(i);

    std::vector<const Relation*> rels;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (q.in_cut[a]) rels.push_back(&q.relations[a]);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::vector<int> digits(total_cells, 0);
        std::uint64_t t = begin;
        for (int i = 0; i < total_cells && t; ++i) {
            digits[i] = static_cast<int>(t % p);
            t /= p;
        }
        auto mat_of = [&](int arrow) {
            const detail::Cell& c = cells[arrow_cell[arrow]];
            detail::FpMat m;
            m.r = c.rows;
            m.c = c.cols;
            m.a = digits.data() + c.offset;
            return m;
        };
        auto path_value = [&](const Path& path) {
            detail::FpMat acc = mat_of(path[0]);
            for (size_t i = 1; i < path.size(); ++i)
                acc = detail::mat_mul(mat_of(path[i]), acc, p);
            return acc;
        };
        std::uint64_t cnt = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            bool ok = true;
            for (const Relation* r : rels) {
                detail::FpMat a = path_value(r->plus);
                detail::FpMat b = path_value(r->minus);
                int sz = a.r * a.c;
                for (int i = 0; i < sz; ++i)
                    if (a.a[i] != b.a[i]) { ok = false; break; }
                if (!ok) break;
            }
            if (ok) ++cnt;
            // odometer step
            for (int i = 0; i < total_cells; ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
        }
        return cnt;
    };

    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    std::uint64_t chunk = n / workers + 1;
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    for (int wkr = 0; wkr < workers; ++wkr) {
        std::uint64_t lo = std::min<std::uint64_t>(n, wkr * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
        threads.emplace_back([&, wkr, lo, hi] { partial[wkr] = run_range(lo, hi); });
    }
    for (auto& th : threads) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t x : partial) total += x;

    CountResult res;
    res.alpha = alpha;
    res.prime = p;
    res.count = Int(total);
    return res;
}

}  // namespace mdt
