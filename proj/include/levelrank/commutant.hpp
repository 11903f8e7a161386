#pragma once

// Graded commutants and brute-force module generation.
//
// For an affine current subalgebra with bilinear generators, a vector lies
// in the commutant iff every non-negative generator mode kills it. Per
// weight the kernel is cut out of the filtered ambient space by exact
// elimination; the mode bound p <= 2w carries margin, since modes with
// p > w annihilate weight-w states outright.

#include "checks.hpp"
#include "currents.hpp"
#include "linalg.hpp"
#include "orbifold.hpp"

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace levelrank {

struct AmbientFilter {
    Parity parity = Parity::even;
    std::optional<GroupDescriptor> group;

    std::string str() const {
        std::string s = parity == Parity::even ? "even" : parity == Parity::odd ? "odd" : "any";
        if (group && !group->generators.empty()) s += "+fixed";
        return s;
    }
};

struct GradedSubspace {
    FockConfig cfg;
    std::string ambient;
    std::map<int, std::vector<FockVector>> levels;  // weight2 -> canonical basis

    int dim2(int weight2) const {
        auto it = levels.find(weight2);
        return it == levels.end() ? 0 : static_cast<int>(it->second.size());
    }
    std::map<int, int> dims2() const {
        std::map<int, int> d;
        for (const auto& [w2, basis] : levels) d[w2] = static_cast<int>(basis.size());
        return d;
    }
};

namespace detail {

inline std::vector<FockVector> canonical_basis(const FockConfig& cfg,
                                               const std::vector<FockVector>& vecs) {
    Echelon<Monomial> ech;
    for (const FockVector& v : vecs) ech.insert(v.terms());
    std::vector<FockVector> out;
    for (auto& row : ech.reduced_basis()) {
        FockVector v(cfg);
        for (auto& [mono, c] : row) v.add(mono, c);
        out.push_back(std::move(v));
    }
    return out;
}

// Slot-parity character of a monomial, as a bitmask over slots.
inline unsigned slot_mask(const FockConfig& cfg, const Monomial& mono) {
    unsigned mask = 0;
    for (const Mode& md : mono.modes) mask ^= 1u << (cfg.slot(md.species) - 1);
    return mask;
}

// Intersects the span of `candidates` with the kernel of one operator.
inline std::vector<FockVector> kernel_step(const FockConfig& cfg,
                                           std::vector<FockVector> candidates,
                                           const Bilinear& x, int p) {
    if (candidates.empty()) return candidates;
    std::vector<SparseVec<Monomial>> images;
    images.reserve(candidates.size());
    bool all_zero = true;
    for (const FockVector& v : candidates) {
        FockVector img = x.apply(p, v);
        if (!img.is_zero()) all_zero = false;
        images.push_back(img.terms());
    }
    if (all_zero) return candidates;
    std::vector<FockVector> next;
    for (const SparseVec<int>& combo : left_kernel(images)) {
        FockVector v(cfg);
        for (const auto& [idx, c] : combo) {
            FockVector part = candidates[idx];
            part.scale(c);
            v += part;
        }
        next.push_back(std::move(v));
    }
    return next;
}

}  // namespace detail

// Exact kernel of all non-negative generator modes inside the filtered
// ambient space, weight by weight. When every generator preserves the
// per-slot grading the computation splits over slot-parity blocks.
inline GradedSubspace commutant_basis(const GeneratorSet& gens, const AmbientFilter& filter,
                                      int max_weight2) {
    GradedSubspace out;
    out.cfg = gens.cfg;
    out.ambient = filter.str();
    auto ops = gens.all();

    bool blockable = true;
    for (const auto& [label, x] : ops)
        if (!x->is_slot_diagonal()) blockable = false;

    for (int w2 = 0; w2 <= max_weight2; ++w2) {
        std::vector<Monomial> ambient = weight_basis(gens.cfg, w2, filter.parity);
        if (filter.group) {
            std::vector<Monomial> kept;
            for (Monomial& m : ambient)
                if (filter.group->fixes(gens.cfg, m)) kept.push_back(std::move(m));
            ambient = std::move(kept);
        }
        if (ambient.empty()) {
            out.levels[w2] = {};
            continue;
        }

        std::map<unsigned, std::vector<Monomial>> blocks;
        if (blockable)
            for (Monomial& m : ambient) blocks[detail::slot_mask(gens.cfg, m)].push_back(std::move(m));
        else
            blocks[0] = std::move(ambient);

        std::vector<FockVector> kernel;
        for (auto& [mask, monos] : blocks) {
            std::vector<FockVector> candidates;
            candidates.reserve(monos.size());
            for (const Monomial& m : monos) {
                FockVector v(gens.cfg);
                v.add(m, CycScalar::one());
                candidates.push_back(std::move(v));
            }
            for (int p = 0; p <= w2 && !candidates.empty(); ++p) {
                if (w2 - 2 * p < 0) break;  // deeper modes annihilate outright
                for (const auto& [label, x] : ops) {
                    candidates = detail::kernel_step(gens.cfg, std::move(candidates), *x, p);
                    if (candidates.empty()) break;
                }
            }
            for (FockVector& v : candidates) kernel.push_back(std::move(v));
        }
        out.levels[w2] = detail::canonical_basis(gens.cfg, kernel);
    }
    return out;
}

// Post-hoc kernel verification, independent of the elimination path: every
// reported basis vector must be killed by every non-negative mode.
inline bool recheck_kernel(const GradedSubspace& space, const GeneratorSet& gens) {
    auto ops = gens.all();
    for (const auto& [w2, basis] : space.levels)
        for (const FockVector& v : basis)
            for (int p = 0; 2 * p <= w2; ++p)
                for (const auto& [label, x] : ops)
                    if (!x->apply(p, v).is_zero()) return false;
    return true;
}

enum class ModeRange { negative_only, non_positive };

// Closure of the seeds under generator modes in the given range, truncated
// at max_weight2, with per-weight rank saturation.
inline GradedSubspace generated_subspace(const std::vector<FockVector>& seeds,
                                         const GeneratorSet& gens, ModeRange range,
                                         int max_weight2) {
    GradedSubspace out;
    out.cfg = gens.cfg;
    out.ambient = "span";
    auto ops = gens.all();

    std::map<int, Echelon<Monomial>> echelons;
    std::deque<std::pair<int, FockVector>> queue;

    auto offer = [&](FockVector v) {
        if (v.is_zero()) return;
        int w2 = v.homogeneous_weight2();
        if (w2 > max_weight2) return;
        SparseVec<Monomial> row = v.terms();
        Echelon<Monomial>& ech = echelons[w2];
        ech.reduce(row);
        if (row.empty()) return;
        FockVector reduced(gens.cfg);
        for (const auto& [mono, c] : row) reduced.add(mono, c);
        ech.insert(std::move(row));
        queue.emplace_back(w2, std::move(reduced));
    };

    for (const FockVector& s : seeds) offer(s);
    while (!queue.empty()) {
        auto [w2, v] = std::move(queue.front());
        queue.pop_front();
        int p_hi = (range == ModeRange::non_positive) ? 0 : -1;
        int p_lo = -(max_weight2 - w2) / 2;
        for (const auto& [label, x] : ops)
            for (int p = p_lo; p <= p_hi; ++p) offer(x->apply(p, v));
    }

    for (auto& [w2, ech] : echelons) {
        std::vector<FockVector> basis;
        for (auto& row : ech.reduced_basis()) {
            FockVector v(gens.cfg);
            for (auto& [mono, c] : row) v.add(mono, c);
            basis.push_back(std::move(v));
        }
        out.levels[w2] = std::move(basis);
    }
    for (int w2 = 0; w2 <= max_weight2; ++w2) out.levels.try_emplace(w2);
    return out;
}

enum class CompareMode { dims, containment };

inline CheckReport compare_graded(const GradedSubspace& a, const GradedSubspace& b,
                                  CompareMode mode) {
    if (!(a.cfg == b.cfg)) throw std::invalid_argument("ambient mismatch");
    CheckReport rep;
    rep.title = mode == CompareMode::dims ? "graded dimension comparison" : "graded containment";
    int top = 0;
    for (const auto& [w2, basis] : a.levels) top = std::max(top, w2);
    for (const auto& [w2, basis] : b.levels) top = std::max(top, w2);
    for (int w2 = 0; w2 <= top; ++w2) {
        if (mode == CompareMode::dims) {
            int da = a.dim2(w2), db = b.dim2(w2);
            rep.add("weight " + std::to_string(w2) + "/2", da == db,
                    std::to_string(da) + " vs " + std::to_string(db));
        } else {
            auto it = a.levels.find(w2);
            if (it == a.levels.end() || it->second.empty()) continue;
            Echelon<Monomial> ech;
            auto jt = b.levels.find(w2);
            if (jt != b.levels.end())
                for (const FockVector& v : jt->second) ech.insert(v.terms());
            bool ok = true;
            for (const FockVector& v : it->second)
                if (!ech.contains(v.terms())) ok = false;
            rep.add("weight " + std::to_string(w2) + "/2 contained", ok);
        }
    }
    return rep;
}

}  // namespace levelrank
