#pragma once

// Sign involutions acting slot-wise on Fock monomials, the abelian group
// they generate, and fixed-point subspaces.
//
// sigma_i multiplies a monomial by (-1)^{number of modes in slot i}; this is
// the multiplicative extension of the defining action on bilinear states and
// makes every monomial a simultaneous eigenvector.

#include "fock.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelrank {

struct SignAutomorphism {
    std::vector<int8_t> signs;  // index j-1 -> sign of slot j

    static SignAutomorphism identity(int n) { return {std::vector<int8_t>(n, 1)}; }
    static SignAutomorphism sigma(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("slot index out of range");
        auto a = identity(n);
        a.signs[i - 1] = -1;
        return a;
    }
    SignAutomorphism compose(const SignAutomorphism& o) const {
        SignAutomorphism r = *this;
        for (std::size_t k = 0; k < signs.size(); ++k) r.signs[k] *= o.signs[k];
        return r;
    }
    bool is_identity() const {
        for (int8_t s : signs)
            if (s < 0) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (int8_t s : signs) out += (s > 0 ? '+' : '-');
        return out;
    }
    friend bool operator<(const SignAutomorphism& a, const SignAutomorphism& b) {
        return a.signs < b.signs;
    }
    friend bool operator==(const SignAutomorphism& a, const SignAutomorphism& b) {
        return a.signs == b.signs;
    }
};

inline int monomial_eigenvalue(const SignAutomorphism& a, const FockConfig& cfg,
                               const Monomial& mono) {
    int sign = 1;
    for (const Mode& md : mono.modes) sign *= a.signs[cfg.slot(md.species) - 1];
    return sign;
}

inline FockVector sigma_action(const SignAutomorphism& a, const FockVector& v) {
    if (static_cast<int>(a.signs.size()) != v.config().n)
        throw std::invalid_argument("Fock configuration mismatch");
    FockVector out(v.config());
    for (const auto& [mono, c] : v.terms())
        out.add(mono, monomial_eigenvalue(a, v.config(), mono) > 0 ? c : -c);
    return out;
}

struct GroupDescriptor {
    int n = 0;
    std::vector<SignAutomorphism> generators;

    static GroupDescriptor trivial(int n) { return {n, {}}; }
    // G = <sigma_1, ..., sigma_n>.
    static GroupDescriptor full(int n) {
        GroupDescriptor g{n, {}};
        for (int i = 1; i <= n; ++i) g.generators.push_back(SignAutomorphism::sigma(n, i));
        return g;
    }

    bool fixes(const FockConfig& cfg, const Monomial& mono) const {
        for (const auto& g : generators)
            if (monomial_eigenvalue(g, cfg, mono) < 0) return false;
        return true;
    }

    std::vector<SignAutomorphism> closure() const {
        std::vector<SignAutomorphism> out{SignAutomorphism::identity(n)};
        for (const auto& g : generators) {
            std::vector<SignAutomorphism> next = out;
            for (const auto& e : out) {
                SignAutomorphism c = e.compose(g);
                bool seen = false;
                for (const auto& o : next)
                    if (o == c) { seen = true; break; }
                if (!seen) next.push_back(c);
            }
            out = std::move(next);
        }
        return out;
    }
};

// Exact simultaneous +1-eigenspace of the group generators at one weight,
// inside the parity-filtered ambient. Sign automorphisms act diagonally on
// monomials, so the fixed space has a monomial basis.
inline std::vector<Monomial> fixed_monomials(const GroupDescriptor& group, const FockConfig& cfg,
                                             int weight2, Parity parity) {
    std::vector<Monomial> out;
    for (Monomial& mono : weight_basis(cfg, weight2, parity))
        if (group.fixes(cfg, mono)) out.push_back(std::move(mono));
    return out;
}

// Character-average cross-check: dim of the fixed space equals
// (1/|G|) sum_{g in G} tr(g) on the same graded piece.
inline bool fixed_dimension_matches_trace(const GroupDescriptor& group, const FockConfig& cfg,
                                          int weight2, Parity parity) {
    auto elements = group.closure();
    long long trace_sum = 0;
    for (const Monomial& mono : weight_basis(cfg, weight2, parity))
        for (const auto& g : elements) trace_sum += monomial_eigenvalue(g, cfg, mono);
    long long fixed = static_cast<long long>(fixed_monomials(group, cfg, weight2, parity).size());
    return trace_sum == fixed * static_cast<long long>(elements.size());
}

}  // namespace levelrank
