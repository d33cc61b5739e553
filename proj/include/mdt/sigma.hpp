#pragma once

#include "mdt/common.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace mdt {

struct ToricData {
    int n0 = 1, n1 = 0;
    int N() const { return n0 + n1; }
    void validate() const {
        if (n0 < 1 || n1 < 0 || n0 < n1)
            throw invalid_input("toric data requires n0 >= n1 >= 0 and n0 >= 1");
    }
};

/// Partition of the polygon, keyed by the row sequence sigma_y(i) for
/// i = 1/2, 3/2, ..., N-1/2 (row[k] holds sigma_y(k+1/2)). The x-coordinates
/// are forced: within each row they decrease strictly as i grows.
class SigmaPartition {
public:
    SigmaPartition(ToricData t, std::vector<int> row) : t_(t), row_(std::move(row)) {
        t_.validate();
        if (static_cast<int>(row_.size()) != t_.N())
            throw invalid_input("row length must equal N");
        int c0 = 0, c1 = 0;
        for (int b : row_) {
            if (b == 0) ++c0;
            else if (b == 1) ++c1;
            else throw invalid_input("row entries must be 0 or 1");
        }
        if (c0 != t_.n0 || c1 != t_.n1)
            throw invalid_input("row must contain n0 zeros and n1 ones");
    }

    static SigmaPartition from_bits(const std::string& bits) {
        std::vector<int> row;
        int c0 = 0, c1 = 0;
        for (char ch : bits) {
            if (ch == '0') { row.push_back(0); ++c0; }
            else if (ch == '1') { row.push_back(1); ++c1; }
            else throw invalid_input("sigma string must be over {0,1}");
        }
        if (row.empty()) throw invalid_input("sigma string is empty");
        return SigmaPartition(ToricData{c0, c1}, row);
    }

    const ToricData& toric() const { return t_; }
    int N() const { return t_.N(); }
    const std::vector<int>& row() const { return row_; }

    std::string bits() const {
        std::string s;
        for (int b : row_) s += static_cast<char>('0' + b);
        return s;
    }

    /// k has a loop iff sigma_y(k-1/2) = sigma_y(k+1/2)
    std::set<int> loop_set() const {
        std::set<int> s;
        int N = this->N();
        for (int k = 0; k < N; ++k)
            if (row_[(k + N - 1) % N] == row_[k]) s.insert(k);
        return s;
    }

    /// Reconstructed table (sigma_x(i), sigma_y(i)) for i = 1/2, ..., N-1/2;
    /// x is returned as its doubled (odd) numerator.
    std::vector<std::pair<int, int>> table() const {
        int seen0 = 0, seen1 = 0;
        std::vector<std::pair<int, int>> out;
        out.reserve(row_.size());
        for (int b : row_) {
            if (b == 0) {
                out.emplace_back(2 * (t_.n0 - seen0) - 1, 0);
                ++seen0;
            } else {
                out.emplace_back(2 * (t_.n1 - seen1) - 1, 1);
                ++seen1;
            }
        }
        return out;
    }

    /// Flip at a vertex without a loop: swaps the two adjacent triangle rows.
    SigmaPartition flip(int k) const {
        int N = this->N();
        if (k < 0 || k >= N) throw invalid_input("flip vertex out of range");
        if (loop_set().count(k))
            throw invalid_input("flip rejected: vertex carries a loop (not a diagonal of a parallelogram)");
        std::vector<int> r = row_;
        std::swap(r[(k + N - 1) % N], r[k]);
        return SigmaPartition(t_, std::move(r));
    }

    bool operator==(const SigmaPartition& o) const { return t_.n0 == o.t_.n0 && t_.n1 == o.t_.n1 && row_ == o.row_; }

private:
    ToricData t_;
    std::vector<int> row_;
};

/// The partition with loops at the first N' = n0-n1 vertices only:
/// N' zeros followed by n1 copies of (1,0).
inline SigmaPartition special_sigma(int n0, int n1) {
    ToricData t{n0, n1};
    t.validate();
    std::vector<int> row(t.n0 - t.n1, 0);
    for (int j = 0; j < n1; ++j) {
        row.push_back(1);
        row.push_back(0);
    }
    return SigmaPartition(t, std::move(row));
}

/// Vertex classes of the special partition: I1 = loops, then I2/I3 alternate.
struct SpecialClasses {
    int Nprime = 0;
    std::vector<int> cls;  // per vertex: 1, 2 or 3

    bool in_I1(int v) const { return cls[v] == 1; }
    bool in_I2(int v) const { return cls[v] == 2; }
    bool in_I3(int v) const { return cls[v] == 3; }

    static SpecialClasses make(int n0, int n1) {
        ToricData t{n0, n1};
        t.validate();
        SpecialClasses s;
        s.Nprime = n0 - n1;
        s.cls.assign(t.N(), 1);
        for (int v = s.Nprime; v < t.N(); ++v) s.cls[v] = ((v - s.Nprime) % 2 == 0) ? 2 : 3;
        return s;
    }
};

}  // namespace mdt
