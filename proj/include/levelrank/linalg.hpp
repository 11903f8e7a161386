#pragma once

// Exact sparse Gaussian elimination over Q(zeta_8), with deterministic
// first-nonzero pivoting. Rows are kept monic on their pivot; insertion
// order is fixed by the caller, so bases come out bit-identical across runs.

#include "cyclotomic.hpp"

#include <map>
#include <vector>

namespace levelrank {

template <typename Key>
using SparseVec = std::map<Key, CycScalar>;

template <typename Key>
void axpy(SparseVec<Key>& y, const CycScalar& a, const SparseVec<Key>& x) {
    if (a.is_zero()) return;
    for (const auto& [k, c] : x) {
        auto [it, fresh] = y.emplace(k, CycScalar::zero());
        it->second += a * c;
        if (it->second.is_zero()) y.erase(it);
    }
}

template <typename Key>
class Echelon {
  public:
    // Eliminates every pivot key from v; the remainder is zero iff v lies in
    // the current row span.
    void reduce(SparseVec<Key>& v) const {
        auto pos = v.begin();
        while (pos != v.end()) {
            auto row = rows_.find(pos->first);
            if (row == rows_.end()) {
                ++pos;
                continue;
            }
            Key key = pos->first;
            axpy(v, -pos->second, row->second);
            pos = v.upper_bound(key);
        }
    }

    // Returns true (and grows the rank) when v is independent of the rows.
    bool insert(SparseVec<Key> v) {
        reduce(v);
        if (v.empty()) return false;
        CycScalar lead_inv = v.begin()->second.inverse();
        for (auto& [k, c] : v) c *= lead_inv;
        Key pivot = v.begin()->first;
        rows_.emplace(std::move(pivot), std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    bool contains(SparseVec<Key> v) const {
        reduce(v);
        return v.empty();
    }

    // Fully back-substituted canonical basis, in pivot order.
    std::vector<SparseVec<Key>> reduced_basis() const {
        std::map<Key, SparseVec<Key>> clean;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseVec<Key> row = it->second;
            auto pos = row.upper_bound(it->first);
            while (pos != row.end()) {
                auto hit = clean.find(pos->first);
                if (hit == clean.end()) {
                    ++pos;
                    continue;
                }
                Key key = pos->first;
                axpy(row, -pos->second, hit->second);
                pos = row.upper_bound(key);
            }
            clean.emplace(it->first, std::move(row));
        }
        std::vector<SparseVec<Key>> out;
        out.reserve(clean.size());
        for (auto& [pivot, row] : clean) out.push_back(std::move(row));
        return out;
    }

  private:
    std::map<Key, SparseVec<Key>> rows_;
};

// Kernel of the linear map e_i -> rows[i]: all exact combinations
// sum_i x_i rows[i] = 0, echelonized over the coordinate index i.
template <typename Key>
std::vector<SparseVec<int>> left_kernel(const std::vector<SparseVec<Key>>& rows) {
    struct AugRow {
        SparseVec<Key> left;
        SparseVec<int> combo;
    };
    std::map<Key, AugRow> echelon;
    std::vector<SparseVec<int>> kernel;

    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        AugRow r{rows[i], {}};
        r.combo[i] = CycScalar::one();
        auto pos = r.left.begin();
        while (pos != r.left.end()) {
            auto hit = echelon.find(pos->first);
            if (hit == echelon.end()) {
                ++pos;
                continue;
            }
            Key key = pos->first;
            CycScalar c = pos->second;
            axpy(r.left, -c, hit->second.left);
            axpy(r.combo, -c, hit->second.combo);
            pos = r.left.upper_bound(key);
        }
        if (r.left.empty()) {
            kernel.push_back(std::move(r.combo));
            continue;
        }
        CycScalar lead_inv = r.left.begin()->second.inverse();
        for (auto& [k, c] : r.left) c *= lead_inv;
        for (auto& [k, c] : r.combo) c *= lead_inv;
        Key pivot = r.left.begin()->first;
        echelon.emplace(std::move(pivot), std::move(r));
    }
    return kernel;
}

}  // namespace levelrank
