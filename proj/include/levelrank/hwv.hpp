#pragma once

// Explicit extremal vectors of the dual current family and machine checks of
// their annihilation and eigenvalue data.
//
// slot_pair_hwv(i, j) expands prod_k (psi_{ki}(-1/2) +- i psi_{kj}(-1/2)) |0>
// over all flavors k, in canonical factor order k = 1, 2, ....  The two sign
// choices are swapped by the slot involutions sigma_i, sigma_j; their sum is
// fixed by the full sign group.

#include "currents.hpp"
#include "orbifold.hpp"

#include <string>
#include <vector>

namespace levelrank {

struct SlotPairVectors {
    FockVector plus;   // + sqrt(-1) twist
    FockVector minus;  // - sqrt(-1) twist
};

namespace detail {

// v <- (sum_t c_t psi_{a_t}(-1/2)) v
inline FockVector linear_factor(const FockVector& v,
                                const std::vector<std::pair<int, CycScalar>>& summands) {
    FockVector out(v.config());
    for (const auto& [sp, c] : summands) {
        FockVector part = apply_mode(sp, -1, v);
        part.scale(c);
        out += part;
    }
    return out;
}

}  // namespace detail

inline SlotPairVectors slot_pair_hwv(const FockConfig& cfg, int i, int j) {
    if (cfg.scheme == Scheme::DComplex)
        throw std::invalid_argument("slot pair vectors live in the real fermion schemes");
    if (!(1 <= i && i < j && j <= cfg.n)) throw std::out_of_range("need 1 <= i < j <= n");
    const CycScalar iu = CycScalar::i();
    FockVector plus = FockVector::vacuum(cfg);
    FockVector minus = FockVector::vacuum(cfg);
    // Rightmost factor first: product order k = 1 .. flavors left to right.
    for (int k = cfg.flavor_count(); k >= 1; --k) {
        int a = cfg.species_real(k, i);
        int b = cfg.species_real(k, j);
        plus = detail::linear_factor(plus, {{a, CycScalar::one()}, {b, iu}});
        minus = detail::linear_factor(minus, {{a, CycScalar::one()}, {b, -iu}});
    }
    return {std::move(plus), std::move(minus)};
}

// The two full-flavor extremal vectors of the even-n decomposition. Each of
// the mN factors (flavor block i outer, slot pair k inner) is a four-mode
// sum coupling the flavor pair (i, m+i) to the slot pair (k, N+k); every
// summand carries site charge -e_i (variant 1: +e_i for variant 2) and slot
// charge -e_k (variant 2: +e_k for k < N, -e_N at k = N), which is what
// pins the diagonal and dual Cartan eigenvalues.
inline FockVector full_spin_hwv(const FockConfig& cfg, int variant) {
    if (cfg.scheme != Scheme::DReal)
        throw std::invalid_argument("full spin vectors live in the D-type real scheme");
    if (cfg.n % 2 != 0 || cfg.n < 4 || cfg.m < 2)
        throw std::invalid_argument("need n = 2N >= 4 and m >= 2");
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant is 1 or 2");
    int N = cfg.n / 2;
    const CycScalar one = CycScalar::one();
    const CycScalar iu = CycScalar::i();

    std::vector<std::vector<std::pair<int, CycScalar>>> factors;
    for (int i = 1; i <= cfg.m; ++i)
        for (int k = 1; k <= N; ++k) {
            int up_a = cfg.species_real(i, k), up_b = cfg.species_real(i, N + k);
            int lo_a = cfg.species_real(cfg.m + i, k), lo_b = cfg.species_real(cfg.m + i, N + k);
            if (variant == 1) {
                // i (psi_{ik} - i psi_{i,N+k}) + (psi_{m+i,k} - i psi_{m+i,N+k})
                factors.push_back({{up_a, iu}, {up_b, one}, {lo_a, one}, {lo_b, -iu}});
            } else if (k < N) {
                // (psi_{ik} + i psi_{i,N+k}) + i (psi_{m+i,k} + i psi_{m+i,N+k})
                factors.push_back({{up_a, one}, {up_b, iu}, {lo_a, iu}, {lo_b, CycScalar(-1)}});
            } else {
                // (psi_{iN} - i psi_{i,2N}) + i (psi_{m+i,N} - i psi_{m+i,2N})
                factors.push_back({{up_a, one}, {up_b, -iu}, {lo_a, iu}, {lo_b, one}});
            }
        }

    FockVector v = FockVector::vacuum(cfg);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        v = detail::linear_factor(v, *it);
    return v;
}

struct EigenEntry {
    std::string op;
    bool is_eigen = false;
    CycScalar value;
    std::string expected;  // exact scalar string, or "unspecified"
    bool matches = false;
};

struct AnnihilationEntry {
    std::string op;
    int mode = 0;
    bool pass = false;
};

struct HwvReport {
    std::string label;
    std::string weight_tag;
    std::vector<AnnihilationEntry> annihilations;
    std::vector<EigenEntry> eigenvalues;

    bool all_annihilations_pass() const {
        for (const auto& a : annihilations)
            if (!a.pass) return false;
        return true;
    }
    bool all_eigen_match() const {
        for (const auto& e : eigenvalues)
            if (!e.matches) return false;
        return true;
    }
};

// What to test a candidate extremal vector against. Every listed operator
// is checked at positive modes up to the cutoff; `annihilators` (the raising
// or lowering half, whichever the claim names) additionally at mode zero;
// `cartan` operators get exact zero-mode eigenvalues. Expected eigenvalues
// are integer strings aligned with `cartan`, or "unspecified".
struct HwvSpec {
    std::vector<std::pair<std::string, const Bilinear*>> cartan;
    std::vector<std::pair<std::string, const Bilinear*>> annihilators;
    std::vector<std::pair<std::string, const Bilinear*>> spectators;
    std::vector<std::string> expected;
    int positive_mode_cutoff = 4;
};

inline HwvReport verify_hwv(const FockVector& v, const std::string& label, const HwvSpec& spec) {
    HwvReport rep;
    rep.label = label;
    const auto& cartan = spec.cartan;
    const auto& cartan_expected = spec.expected;
    auto check_positive = [&](const std::string& name, const Bilinear& x) {
        for (int r = 1; r <= spec.positive_mode_cutoff; ++r)
            rep.annihilations.push_back({name, r, x.apply(r, v).is_zero()});
    };
    for (const auto& [name, x] : cartan) check_positive(name, *x);
    for (const auto& [name, x] : spec.spectators) check_positive(name, *x);
    for (const auto& [name, x] : spec.annihilators) {
        check_positive(name, *x);
        rep.annihilations.push_back({name, 0, x->apply(0, v).is_zero()});
    }
    for (std::size_t k = 0; k < cartan.size(); ++k) {
        EigenEntry e;
        e.op = cartan[k].first;
        FockVector img = cartan[k].second->apply(0, v);
        if (img.is_zero()) {
            e.is_eigen = true;
            e.value = CycScalar::zero();
        } else if (!v.is_zero()) {
            const auto& [mono, c] = *img.terms().begin();
            auto it = v.terms().find(mono);
            if (it != v.terms().end()) {
                CycScalar lambda = c * it->second.inverse();
                FockVector scaled = v;
                scaled.scale(lambda);
                if (scaled == img) {
                    e.is_eigen = true;
                    e.value = lambda;
                }
            }
        }
        if (k < cartan_expected.size() && cartan_expected[k] != "unspecified") {
            e.expected = cartan_expected[k];
            e.matches = e.is_eigen && e.value == CycScalar(std::stol(cartan_expected[k]));
        } else {
            e.expected = "unspecified";
            e.matches = e.is_eigen;
        }
        rep.eigenvalues.push_back(std::move(e));
    }
    return rep;
}

// Membership in the commutant of the given family: every non-negative mode
// of every generator annihilates v. Violations are reported, not thrown.
struct MembershipReport {
    std::string label;
    bool member = true;
    std::vector<std::pair<std::string, int>> violations;  // (operator, mode)
};

inline MembershipReport verify_commutant_membership(const FockVector& v, const std::string& label,
                                                    const GeneratorSet& gens) {
    MembershipReport rep;
    rep.label = label;
    int w2 = v.max_weight2();
    for (const auto& [name, x] : gens.all())
        for (int p = 0; 2 * p <= w2 + 2; ++p)
            if (!x->apply(p, v).is_zero()) {
                rep.member = false;
                rep.violations.emplace_back(name, p);
            }
    return rep;
}

}  // namespace levelrank
