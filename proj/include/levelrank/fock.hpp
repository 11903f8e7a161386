#pragma once

// Neveu-Schwarz fermionic Fock spaces.
//
// A configuration fixes a species scheme over (m, n):
//   DComplex : psi^{+-}_{ij},  1 <= i <= m,    1 <= j <= n   (2mn species)
//   DReal    : psi_{kj},       1 <= k <= 2m,   1 <= j <= n   (2mn species)
//   BReal    : psi_{ij},       1 <= i <= 2m+1, 1 <= j <= n   ((2m+1)n species)
// Modes live at half-integer levels r (stored as the odd integer 2r) and
// satisfy [psi_a(r), psi_b(s)]_+ = delta(a, conj b) delta_{r+s,0}.
// Conjugation flips +/- in the complex scheme and is the identity in the
// real schemes.
//
// States are exact sparse combinations of normally ordered monomials of
// creation modes; the canonical order inside a monomial is by level
// ascending (most negative first), then species.

#include "cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelrank {

enum class Scheme { DComplex, DReal, BReal };

enum class Parity { any, even, odd };

struct FockConfig {
    Scheme scheme;
    int m = 0;
    int n = 0;

    static FockConfig d_complex(int m, int n) { return {Scheme::DComplex, m, n}; }
    static FockConfig d_real(int m, int n) { return {Scheme::DReal, m, n}; }
    static FockConfig b_real(int m, int n) { return {Scheme::BReal, m, n}; }

    int flavor_count() const {
        switch (scheme) {
            case Scheme::DComplex: return m;
            case Scheme::DReal: return 2 * m;
            case Scheme::BReal: return 2 * m + 1;
        }
        return 0;
    }
    int species_count() const {
        return scheme == Scheme::DComplex ? 2 * m * n : flavor_count() * n;
    }

    // DComplex species are ordered (i, j, sign) with + before -, real species (k, j).
    int species_complex(int i, int j, bool minus) const {
        check_range(scheme == Scheme::DComplex, i, m, j);
        return ((i - 1) * n + (j - 1)) * 2 + (minus ? 1 : 0);
    }
    int species_real(int k, int j) const {
        check_range(scheme != Scheme::DComplex, k, flavor_count(), j);
        return (k - 1) * n + (j - 1);
    }

    // 1-based slot index of a species (the tensor factor it belongs to).
    int slot(int species) const {
        if (scheme == Scheme::DComplex) return (species / 2) % n + 1;
        return species % n + 1;
    }
    // 1-based flavor index (i for DComplex, k for real schemes).
    int flavor(int species) const {
        if (scheme == Scheme::DComplex) return species / (2 * n) + 1;
        return species / n + 1;
    }
    bool complex_minus(int species) const { return species & 1; }

    int conj(int species) const {
        return scheme == Scheme::DComplex ? (species ^ 1) : species;
    }

    std::string species_str(int s) const {
        switch (scheme) {
            case Scheme::DComplex:
                return std::string(complex_minus(s) ? "D-:" : "D+:") + std::to_string(flavor(s)) +
                       "," + std::to_string(slot(s));
            case Scheme::DReal:
                return "Dr:" + std::to_string(flavor(s)) + "," + std::to_string(slot(s));
            case Scheme::BReal:
                return "B:" + std::to_string(flavor(s)) + "," + std::to_string(slot(s));
        }
        return "?";
    }

    friend bool operator==(const FockConfig& a, const FockConfig& b) {
        return a.scheme == b.scheme && a.m == b.m && a.n == b.n;
    }
    friend bool operator!=(const FockConfig& a, const FockConfig& b) { return !(a == b); }

  private:
    static void check_range(bool scheme_ok, int flavor, int flavor_max, int j) {
        if (!scheme_ok) throw std::invalid_argument("species constructor used with wrong scheme");
        if (flavor < 1 || flavor > flavor_max)
            throw std::out_of_range("fermion flavor index out of range");
        if (j < 1) throw std::out_of_range("slot index out of range");
    }
};

// A single Clifford mode psi_species(level2 / 2); level2 is odd.
struct Mode {
    int16_t species;
    int16_t level2;

    friend bool operator==(const Mode& a, const Mode& b) {
        return a.species == b.species && a.level2 == b.level2;
    }
    friend bool operator<(const Mode& a, const Mode& b) {
        if (a.level2 != b.level2) return a.level2 < b.level2;
        return a.species < b.species;
    }
};

inline std::string level_str(int level2) { return std::to_string(level2) + "/2"; }

// Normally ordered list of creation modes, strictly increasing in the
// canonical (level, species) order.
struct Monomial {
    std::vector<Mode> modes;

    int weight2() const {
        int w = 0;
        for (const Mode& m : modes) w -= m.level2;
        return w;
    }
    int parity() const { return static_cast<int>(modes.size()) % 2; }
    bool is_vacuum() const { return modes.empty(); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.modes == b.modes; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.modes.begin(), a.modes.end(), b.modes.begin(),
                                            b.modes.end());
    }
};

// Sorts an unordered list of creation modes into canonical order, returning
// the permutation sign, or nullopt when a mode repeats (nilpotence).
inline std::optional<std::pair<Monomial, int>> normalize_modes(std::vector<Mode> modes) {
    for (const Mode& m : modes) {
        if (m.level2 >= 0) throw std::invalid_argument("monomials hold creation modes only");
        if (!(m.level2 & 1)) throw std::invalid_argument("mode level must be half-integral");
    }
    // Insertion sort; fermionic sign = parity of the sorting permutation.
    int sign = 1;
    for (std::size_t i = 1; i < modes.size(); ++i) {
        Mode key = modes[i];
        std::size_t j = i;
        while (j > 0 && key < modes[j - 1]) {
            modes[j] = modes[j - 1];
            --j;
            sign = -sign;
        }
        modes[j] = key;
    }
    for (std::size_t i = 1; i < modes.size(); ++i)
        if (modes[i] == modes[i - 1]) return std::nullopt;
    return std::make_pair(Monomial{std::move(modes)}, sign);
}

class FockVector {
  public:
    FockVector() = default;
    explicit FockVector(FockConfig cfg) : cfg_(cfg) {}

    static FockVector vacuum(FockConfig cfg) {
        FockVector v(cfg);
        v.terms_[Monomial{}] = CycScalar::one();
        return v;
    }

    const FockConfig& config() const { return cfg_; }
    const std::map<Monomial, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Monomial& mono, const CycScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(mono, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        require_same_config(o);
        for (const auto& [mono, c] : o.terms_) add(mono, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        require_same_config(o);
        for (const auto& [mono, c] : o.terms_) add(mono, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    FockVector& scale(const CycScalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, coeff] : terms_) coeff *= c;
        return *this;
    }
    friend FockVector operator*(const CycScalar& c, FockVector v) { return v.scale(c); }

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.cfg_ == b.cfg_ && a.terms_ == b.terms_;
    }

    // Weight (times two) shared by all terms; -1 for the zero vector.
    // Throws when the vector is not homogeneous.
    int homogeneous_weight2() const {
        int w = -1;
        for (const auto& [mono, c] : terms_) {
            int mw = mono.weight2();
            if (w < 0)
                w = mw;
            else if (w != mw)
                throw std::logic_error("FockVector is not weight-homogeneous");
        }
        return w;
    }
    int max_weight2() const {
        int w = 0;
        for (const auto& [mono, c] : terms_) w = std::max(w, mono.weight2());
        return w;
    }

    // One term per line: "coeff | species(level) ..." ("1" marks the vacuum).
    std::string to_text() const {
        std::string out;
        for (const auto& [mono, c] : terms_) {
            out += c.str();
            out += " |";
            if (mono.is_vacuum()) {
                out += " 1";
            } else {
                for (const Mode& md : mono.modes) {
                    out += ' ';
                    out += cfg_.species_str(md.species);
                    out += '(';
                    out += level_str(md.level2);
                    out += ')';
                }
            }
            out += '\n';
        }
        return out;
    }

    void require_same_config(const FockVector& o) const {
        if (!(cfg_ == o.cfg_)) throw std::invalid_argument("Fock configuration mismatch");
    }

  private:
    FockConfig cfg_;
    std::map<Monomial, CycScalar> terms_;
};

namespace detail {

// psi_species(level2/2) applied to a single monomial:
// creation inserts with the anticommutation sign, annihilation contracts
// against the unique conjugate partner at the opposite level.
inline std::optional<std::pair<Monomial, int>> apply_mode_monomial(const FockConfig& cfg,
                                                                   int species, int level2,
                                                                   const Monomial& mono) {
    if (level2 < 0) {
        Mode nm{static_cast<int16_t>(species), static_cast<int16_t>(level2)};
        auto it = std::lower_bound(mono.modes.begin(), mono.modes.end(), nm);
        if (it != mono.modes.end() && *it == nm) return std::nullopt;  // nilpotence
        Monomial out;
        out.modes.reserve(mono.modes.size() + 1);
        out.modes.insert(out.modes.end(), mono.modes.begin(), it);
        out.modes.push_back(nm);
        out.modes.insert(out.modes.end(), it, mono.modes.end());
        int idx = static_cast<int>(it - mono.modes.begin());
        return std::make_pair(std::move(out), (idx & 1) ? -1 : 1);
    }
    Mode target{static_cast<int16_t>(cfg.conj(species)), static_cast<int16_t>(-level2)};
    auto it = std::lower_bound(mono.modes.begin(), mono.modes.end(), target);
    if (it == mono.modes.end() || !(*it == target)) return std::nullopt;
    Monomial out;
    out.modes.reserve(mono.modes.size() - 1);
    out.modes.insert(out.modes.end(), mono.modes.begin(), it);
    out.modes.insert(out.modes.end(), it + 1, mono.modes.end());
    int idx = static_cast<int>(it - mono.modes.begin());
    return std::make_pair(std::move(out), (idx & 1) ? -1 : 1);
}

}  // namespace detail

inline FockVector apply_mode(int species, int level2, const FockVector& v) {
    if (species < 0 || species >= v.config().species_count())
        throw std::out_of_range("species out of range for configuration");
    if (!(level2 & 1)) throw std::invalid_argument("mode level must be half-integral");
    FockVector out(v.config());
    for (const auto& [mono, c] : v.terms()) {
        auto r = detail::apply_mode_monomial(v.config(), species, level2, mono);
        if (r) out.add(r->first, (r->second > 0) ? c : -c);
    }
    return out;
}

// All monomials of exact weight w (= weight2/2) passing the parity filter,
// in canonical order.
inline std::vector<Monomial> weight_basis(const FockConfig& cfg, int weight2, Parity parity) {
    if (weight2 < 0) throw std::invalid_argument("weight must be non-negative");
    std::vector<Monomial> out;
    std::vector<Mode> stack;
    int species_count = cfg.species_count();

    auto emit = [&]() {
        int p = static_cast<int>(stack.size()) % 2;
        if (parity == Parity::even && p) return;
        if (parity == Parity::odd && !p) return;
        out.push_back(Monomial{stack});
    };

    // Depth-first over modes in canonical ascending order.
    auto rec = [&](auto&& self, int remaining2, int min_level2, int min_species) -> void {
        if (remaining2 == 0) {
            emit();
            return;
        }
        // Weight-0 remainder already emitted; a parity-passing completion may
        // still exist at this node only through further modes.
        for (int lvl = std::max(min_level2, -remaining2) | 1; lvl <= -1; lvl += 2) {
            int first_species = (lvl == min_level2) ? min_species : 0;
            for (int s = first_species; s < species_count; ++s) {
                stack.push_back(Mode{static_cast<int16_t>(s), static_cast<int16_t>(lvl)});
                self(self, remaining2 + lvl, lvl, s + 1);
                stack.pop_back();
            }
        }
    };
    rec(rec, weight2, -weight2 | 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Linear substitution between the complex and real D-type mode bases,
// applied mode by mode and renormalized:
//   psi_{kj}     = (psi^+_{kj} + psi^-_{kj}) / sqrt2
//   psi_{m+k,j}  = -i (psi^+_{kj} - psi^-_{kj}) / sqrt2
//   psi^{+-}_{kj} = (psi_{kj} +- i psi_{m+k,j}) / sqrt2
inline FockVector change_basis(const FockVector& v, Scheme target) {
    const FockConfig& cfg = v.config();
    if (cfg.scheme == Scheme::BReal || target == Scheme::BReal)
        throw std::invalid_argument("change_basis is defined for D-type schemes only");
    FockConfig tgt = (target == Scheme::DComplex) ? FockConfig::d_complex(cfg.m, cfg.n)
                                                  : FockConfig::d_real(cfg.m, cfg.n);
    if (cfg.scheme == target) return v;

    const CycScalar isqrt2 = CycScalar::inv_sqrt2();
    const CycScalar i_unit = CycScalar::i();

    // Two-term image of one source mode in the target scheme.
    auto image = [&](const Mode& md) -> std::array<std::pair<int, CycScalar>, 2> {
        int j = cfg.slot(md.species);
        if (cfg.scheme == Scheme::DReal) {
            int k = cfg.flavor(md.species);
            if (k <= cfg.m) {
                return {{{tgt.species_complex(k, j, false), isqrt2},
                         {tgt.species_complex(k, j, true), isqrt2}}};
            }
            CycScalar c = -(i_unit * isqrt2);
            return {{{tgt.species_complex(k - cfg.m, j, false), c},
                     {tgt.species_complex(k - cfg.m, j, true), -c}}};
        }
        int k = cfg.flavor(md.species);
        CycScalar c = cfg.complex_minus(md.species) ? -(i_unit * isqrt2) : i_unit * isqrt2;
        return {{{tgt.species_real(k, j), isqrt2}, {tgt.species_real(cfg.m + k, j), c}}};
    };

    FockVector out(tgt);
    for (const auto& [mono, coeff] : v.terms()) {
        // Expand the substitution product, rightmost factor applied first.
        FockVector acc = FockVector::vacuum(tgt);
        acc.scale(coeff);
        for (auto it = mono.modes.rbegin(); it != mono.modes.rend(); ++it) {
            FockVector next(tgt);
            for (const auto& [sp, c] : image(*it)) {
                FockVector piece = apply_mode(sp, it->level2, acc);
                piece.scale(c);
                next += piece;
            }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

}  // namespace levelrank
