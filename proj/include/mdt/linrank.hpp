#pragma once

#include "mdt/common.hpp"

#include <vector>

namespace mdt {

/// Rank of an integer matrix over Q, by fraction-free (Bareiss) elimination.
inline int int_matrix_rank(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = col + 1; cc < cols; ++cc) {
                a[r][cc] = (a[rank][col] * a[r][cc] - a[r][col] * a[rank][cc]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace mdt
