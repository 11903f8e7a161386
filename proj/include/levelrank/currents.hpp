#pragma once

// Fermion-bilinear currents and the generator catalogs of the orthogonal
// affine algebras realized on Fock space.
//
// A Bilinear stores X = sum_{a<b} c_ab :psi_a psi_b: as an antisymmetrized
// coefficient table. Its p-th mode acts as
//   X(p) = sum_{a<b} c_ab sum_{r} :psi_a(r) psi_b(p-r):
// with annihilators normally ordered to the right (reordering sign -1 when
// r > 0 > p - r). Symbolic Wick brackets satisfy
//   [X(p), Y(q)] = Z(p+q) + p c delta_{p+q,0}
// with Z = X g Y - Y g X and c = tr(X g Y g)/2, g the conjugation pairing.

#include "cyclotomic.hpp"
#include "fock.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace levelrank {

class Bilinear {
  public:
    Bilinear() = default;
    explicit Bilinear(FockConfig cfg) : cfg_(cfg) {}

    const FockConfig& config() const { return cfg_; }
    const std::map<std::pair<int16_t, int16_t>, CycScalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    // Adds coeff * psi_a(-1/2) psi_b(-1/2), antisymmetrized into a < b.
    void add_term(int a, int b, const CycScalar& coeff) {
        if (a == b) throw std::invalid_argument("diagonal bilinear entries are forbidden");
        CycScalar c = coeff;
        if (a > b) {
            std::swap(a, b);
            c = -c;
        }
        auto key = std::make_pair(static_cast<int16_t>(a), static_cast<int16_t>(b));
        auto [it, fresh] = entries_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    Bilinear& operator+=(const Bilinear& o) {
        if (!(cfg_ == o.cfg_)) throw std::invalid_argument("Fock configuration mismatch");
        for (const auto& [key, c] : o.entries_) add_term(key.first, key.second, c);
        return *this;
    }
    Bilinear& scale(const CycScalar& s) {
        if (s.is_zero()) {
            entries_.clear();
            return *this;
        }
        for (auto& [key, c] : entries_) c *= s;
        return *this;
    }
    friend Bilinear operator-(Bilinear x) { return x.scale(CycScalar(-1)); }

    friend bool operator==(const Bilinear& a, const Bilinear& b) {
        return a.cfg_ == b.cfg_ && a.entries_ == b.entries_;
    }

    // The weight-1 state sum c_ab psi_a(-1/2) psi_b(-1/2) |0>.
    FockVector state() const {
        FockVector v(cfg_);
        for (const auto& [key, c] : entries_) {
            Monomial mono;
            mono.modes = {Mode{key.first, -1}, Mode{key.second, -1}};
            if (Mode{key.second, -1} < Mode{key.first, -1})
                std::swap(mono.modes[0], mono.modes[1]);
            v.add(mono, c);
        }
        return v;
    }

    // All current entries stay inside one tensor slot; such bilinears
    // preserve the per-slot grading of monomials.
    bool is_slot_diagonal() const {
        for (const auto& [key, c] : entries_)
            if (cfg_.slot(key.first) != cfg_.slot(key.second)) return false;
        return true;
    }

    FockVector apply(int p, const FockVector& v) const {
        if (!(cfg_ == v.config())) throw std::invalid_argument("Fock configuration mismatch");
        FockVector out(cfg_);
        for (const auto& [mono, coeff] : v.terms()) apply_to_monomial(p, mono, coeff, out);
        return out;
    }

    void apply_to_monomial(int p, const Monomial& mono, const CycScalar& coeff,
                           FockVector& out) const {
        int w2 = mono.weight2();
        int lo = 2 * p - w2;
        if (!(lo & 1)) ++lo;
        for (const auto& [key, cab] : entries_) {
            for (int two_r = lo; two_r <= w2; two_r += 2) {
                int two_s = 2 * p - two_r;
                int first_sp, first_lv, second_sp, second_lv;
                int sgn = 1;
                if (two_r > 0 && two_s < 0) {
                    // :psi_a(r) psi_b(s): = -psi_b(s) psi_a(r); apply psi_a first.
                    first_sp = key.first;
                    first_lv = two_r;
                    second_sp = key.second;
                    second_lv = two_s;
                    sgn = -1;
                } else {
                    first_sp = key.second;
                    first_lv = two_s;
                    second_sp = key.first;
                    second_lv = two_r;
                }
                auto t1 = detail::apply_mode_monomial(cfg_, first_sp, first_lv, mono);
                if (!t1) continue;
                auto t2 = detail::apply_mode_monomial(cfg_, second_sp, second_lv, t1->first);
                if (!t2) continue;
                int s = sgn * t1->second * t2->second;
                out.add(t2->first, (s > 0) ? coeff * cab : -(coeff * cab));
            }
        }
    }

  private:
    FockConfig cfg_;
    std::map<std::pair<int16_t, int16_t>, CycScalar> entries_;
};

struct BracketResult {
    Bilinear z;
    CycScalar central;
};

inline BracketResult bracket(const Bilinear& x, const Bilinear& y) {
    if (!(x.config() == y.config()))
        throw std::invalid_argument("Fock configuration mismatch");
    const FockConfig& cfg = x.config();

    // Full antisymmetric tables, indexed by row.
    auto expand_rows = [](const Bilinear& b) {
        std::map<int, std::vector<std::pair<int, CycScalar>>> rows;
        for (const auto& [key, c] : b.entries()) {
            rows[key.first].emplace_back(key.second, c);
            rows[key.second].emplace_back(key.first, -c);
        }
        return rows;
    };
    auto xr = expand_rows(x);
    auto yr = expand_rows(y);

    Bilinear z(cfg);
    // Z_{ad} = sum_b X_{ab} Y_{conj b, d} - Y_{ab} X_{conj b, d}
    for (const auto& [a, xrow] : xr)
        for (const auto& [b, xc] : xrow) {
            auto it = yr.find(cfg.conj(b));
            if (it == yr.end()) continue;
            for (const auto& [d, yc] : it->second)
                if (a != d) z.add_term(a, d, xc * yc);
        }
    for (const auto& [a, yrow] : yr)
        for (const auto& [b, yc] : yrow) {
            auto it = xr.find(cfg.conj(b));
            if (it == xr.end()) continue;
            for (const auto& [d, xc] : it->second)
                if (a != d) z.add_term(a, d, -(yc * xc));
        }
    // Each unordered pair was accumulated through both antisymmetric orders.
    z.scale(CycScalar::half());

    // c = (1/2) sum_{ab} X_{ab} Y_{conj b, conj a}
    CycScalar c = CycScalar::zero();
    for (const auto& [a, xrow] : xr)
        for (const auto& [b, xc] : xrow) {
            auto it = yr.find(cfg.conj(b));
            if (it == yr.end()) continue;
            int target = cfg.conj(a);
            for (const auto& [d, yc] : it->second)
                if (d == target) c += xc * yc;
        }
    return {std::move(z), c * CycScalar::half()};
}

// ---------------------------------------------------------------------------
// Generator catalogs.

enum class AlgebraKind { so_chevalley, so_flat, heisenberg };

enum class FermionBasis { complex_pairs, real };

struct ChevalleyTriple {
    std::string label;
    Bilinear cartan, raising, lowering;
};

struct FlatGenerator {
    std::string label;
    int i = 0, j = 0;  // E_{ij}, i < j
    Bilinear current;
};

struct GeneratorSet {
    std::string name;
    AlgebraKind kind = AlgebraKind::so_chevalley;
    int algebra_size = 0;  // the N of so_N
    int expected_level = 0;
    FockConfig cfg;
    std::vector<ChevalleyTriple> triples;
    std::vector<FlatGenerator> flat;

    std::vector<std::pair<std::string, const Bilinear*>> all() const {
        std::vector<std::pair<std::string, const Bilinear*>> out;
        for (const auto& t : triples) {
            out.emplace_back("h_" + t.label, &t.cartan);
            out.emplace_back("e_" + t.label, &t.raising);
            out.emplace_back("f_" + t.label, &t.lowering);
        }
        for (const auto& g : flat) out.emplace_back(g.label, &g.current);
        return out;
    }
};

namespace detail {

// Chevalley triples of so_{2h} realized on an ordered frame of 2h real
// fermion species, pairing s(k) <-> s(h+k).
inline std::vector<ChevalleyTriple> so_even_frame(const FockConfig& cfg,
                                                  const std::vector<int>& species) {
    int h = static_cast<int>(species.size()) / 2;
    if (h < 2 || species.size() % 2 != 0)
        throw std::invalid_argument("even orthogonal frame needs 2h species, h >= 2");
    auto s = [&](int k) { return species[k - 1]; };
    const CycScalar i_u = CycScalar::i();
    const CycScalar half = CycScalar::half();
    std::vector<ChevalleyTriple> out;
    for (int k = 1; k + 1 <= h; ++k) {
        ChevalleyTriple t;
        t.label = std::to_string(k);
        t.cartan = Bilinear(cfg);
        t.cartan.add_term(s(h + k), s(k), i_u);
        t.cartan.add_term(s(h + k + 1), s(k + 1), -i_u);
        t.raising = Bilinear(cfg);
        t.raising.add_term(s(k), s(h + k + 1), half);
        t.raising.add_term(s(k + 1), s(h + k), half);
        t.raising.add_term(s(k), s(k + 1), half * i_u);
        t.raising.add_term(s(h + k), s(h + k + 1), half * i_u);
        t.lowering = Bilinear(cfg);
        t.lowering.add_term(s(k), s(h + k + 1), -half);
        t.lowering.add_term(s(k + 1), s(h + k), -half);
        t.lowering.add_term(s(k), s(k + 1), half * i_u);
        t.lowering.add_term(s(h + k), s(h + k + 1), half * i_u);
        out.push_back(std::move(t));
    }
    ChevalleyTriple t;
    t.label = std::to_string(h);
    t.cartan = Bilinear(cfg);
    t.cartan.add_term(s(2 * h - 1), s(h - 1), i_u);
    t.cartan.add_term(s(2 * h), s(h), i_u);
    t.raising = Bilinear(cfg);
    t.raising.add_term(s(h - 1), s(2 * h), -half);
    t.raising.add_term(s(h), s(2 * h - 1), half);
    t.raising.add_term(s(h - 1), s(h), half * i_u);
    t.raising.add_term(s(2 * h - 1), s(2 * h), -(half * i_u));
    t.lowering = Bilinear(cfg);
    t.lowering.add_term(s(h - 1), s(2 * h), half);
    t.lowering.add_term(s(h), s(2 * h - 1), -half);
    t.lowering.add_term(s(h - 1), s(h), half * i_u);
    t.lowering.add_term(s(2 * h - 1), s(2 * h), -(half * i_u));
    out.push_back(std::move(t));
    return out;
}

// Chevalley triples of so_{2h+1} on 2h+1 species: the long-root triples of
// the even frame plus the short-root triple through the last species.
inline std::vector<ChevalleyTriple> so_odd_frame(const FockConfig& cfg,
                                                 const std::vector<int>& species) {
    int h = static_cast<int>(species.size() - 1) / 2;
    if (h < 1 || species.size() % 2 != 1)
        throw std::invalid_argument("odd orthogonal frame needs 2h+1 species, h >= 1");
    auto s = [&](int k) { return species[k - 1]; };
    const CycScalar i_u = CycScalar::i();
    const CycScalar half = CycScalar::half();
    std::vector<ChevalleyTriple> out;
    for (int k = 1; k + 1 <= h; ++k) {
        ChevalleyTriple t;
        t.label = std::to_string(k);
        t.cartan = Bilinear(cfg);
        t.cartan.add_term(s(h + k), s(k), i_u);
        t.cartan.add_term(s(h + k + 1), s(k + 1), -i_u);
        t.raising = Bilinear(cfg);
        t.raising.add_term(s(k), s(h + k + 1), half);
        t.raising.add_term(s(k + 1), s(h + k), half);
        t.raising.add_term(s(k), s(k + 1), half * i_u);
        t.raising.add_term(s(h + k), s(h + k + 1), half * i_u);
        t.lowering = Bilinear(cfg);
        t.lowering.add_term(s(k), s(h + k + 1), -half);
        t.lowering.add_term(s(k + 1), s(h + k), -half);
        t.lowering.add_term(s(k), s(k + 1), half * i_u);
        t.lowering.add_term(s(h + k), s(h + k + 1), half * i_u);
        out.push_back(std::move(t));
    }
    ChevalleyTriple t;
    t.label = std::to_string(h);
    t.cartan = Bilinear(cfg);
    t.cartan.add_term(s(h), s(2 * h), -(i_u + i_u));
    t.raising = Bilinear(cfg);
    t.raising.add_term(s(h), s(2 * h + 1), i_u);
    t.raising.add_term(s(2 * h), s(2 * h + 1), CycScalar(-1));
    t.lowering = Bilinear(cfg);
    t.lowering.add_term(s(h), s(2 * h + 1), i_u);
    t.lowering.add_term(s(2 * h), s(2 * h + 1), CycScalar(1));
    out.push_back(std::move(t));
    return out;
}

inline std::vector<int> site_species(const FockConfig& cfg, int j) {
    std::vector<int> out;
    for (int k = 1; k <= cfg.flavor_count(); ++k) out.push_back(cfg.species_real(k, j));
    return out;
}

inline std::vector<int> flavor_species(const FockConfig& cfg, int i) {
    std::vector<int> out;
    for (int j = 1; j <= cfg.n; ++j) out.push_back(cfg.species_real(i, j));
    return out;
}

inline void merge_triples(std::vector<ChevalleyTriple>& acc,
                          std::vector<ChevalleyTriple>&& add) {
    if (acc.empty()) {
        acc = std::move(add);
        return;
    }
    for (std::size_t t = 0; t < acc.size(); ++t) {
        acc[t].cartan += add[t].cartan;
        acc[t].raising += add[t].raising;
        acc[t].lowering += add[t].lowering;
    }
}

}  // namespace detail

enum class AlgebraType { B, D };

inline FockConfig duality_config(AlgebraType type, int m, int n) {
    return type == AlgebraType::D ? FockConfig::d_real(m, n) : FockConfig::b_real(m, n);
}

// Chevalley triples of the site copy so_{2m} / so_{2m+1} at slot j.
// For type D both the complex-pair and the real-mode presentations exist;
// they match under change_basis.
inline GeneratorSet site_chevalley(AlgebraType type, int m, int n, int j,
                                   FermionBasis basis = FermionBasis::real) {
    if (j < 1 || j > n) throw std::out_of_range("slot index out of range");
    GeneratorSet gs;
    gs.kind = AlgebraKind::so_chevalley;
    gs.expected_level = 1;
    if (type == AlgebraType::D) {
        if (m < 2) throw std::invalid_argument("type D needs m >= 2");
        gs.algebra_size = 2 * m;
        gs.name = "site so_" + std::to_string(2 * m) + " @" + std::to_string(j);
        if (basis == FermionBasis::real) {
            gs.cfg = FockConfig::d_real(m, n);
            gs.triples = detail::so_even_frame(gs.cfg, detail::site_species(gs.cfg, j));
        } else {
            gs.cfg = FockConfig::d_complex(m, n);
            const CycScalar i_u = CycScalar::i();
            auto sp = [&](int k, bool minus) { return gs.cfg.species_complex(k, j, minus); };
            for (int k = 1; k + 1 <= m; ++k) {
                ChevalleyTriple t;
                t.label = std::to_string(k);
                t.cartan = Bilinear(gs.cfg);
                t.cartan.add_term(sp(k, false), sp(k, true), CycScalar(1));
                t.cartan.add_term(sp(k + 1, false), sp(k + 1, true), CycScalar(-1));
                t.raising = Bilinear(gs.cfg);
                t.raising.add_term(sp(k, false), sp(k + 1, true), i_u);
                t.lowering = Bilinear(gs.cfg);
                t.lowering.add_term(sp(k, true), sp(k + 1, false), i_u);
                gs.triples.push_back(std::move(t));
            }
            ChevalleyTriple t;
            t.label = std::to_string(m);
            t.cartan = Bilinear(gs.cfg);
            t.cartan.add_term(sp(m - 1, false), sp(m - 1, true), CycScalar(1));
            t.cartan.add_term(sp(m, false), sp(m, true), CycScalar(1));
            t.raising = Bilinear(gs.cfg);
            t.raising.add_term(sp(m - 1, false), sp(m, false), i_u);
            t.lowering = Bilinear(gs.cfg);
            t.lowering.add_term(sp(m - 1, true), sp(m, true), i_u);
            gs.triples.push_back(std::move(t));
        }
    } else {
        if (m < 1) throw std::invalid_argument("type B needs m >= 1");
        if (basis != FermionBasis::real)
            throw std::invalid_argument("type B sites exist in the real basis only");
        gs.algebra_size = 2 * m + 1;
        gs.name = "site so_" + std::to_string(2 * m + 1) + " @" + std::to_string(j);
        gs.cfg = FockConfig::b_real(m, n);
        gs.triples = detail::so_odd_frame(gs.cfg, detail::site_species(gs.cfg, j));
    }
    return gs;
}

// Component-wise sums of the site triples over all n slots; level n.
inline GeneratorSet diagonal_generators(AlgebraType type, int m, int n,
                                        FermionBasis basis = FermionBasis::real) {
    GeneratorSet gs = site_chevalley(type, m, n, 1, basis);
    for (int j = 2; j <= n; ++j) {
        GeneratorSet sj = site_chevalley(type, m, n, j, basis);
        detail::merge_triples(gs.triples, std::move(sj.triples));
    }
    gs.name = std::string("diagonal so_") + std::to_string(gs.algebra_size);
    gs.expected_level = n;
    return gs;
}

// The so_n currents commuting with the diagonal family:
//   E_{ij} = sum_k psi_{ki}(-1/2) psi_{kj}(-1/2) |0>,  1 <= i < j <= n,
// at level 2m (type D) or 2m+1 (type B).
inline GeneratorSet dual_currents(AlgebraType type, int m, int n) {
    if (n < 2) throw std::invalid_argument("dual currents need n >= 2");
    GeneratorSet gs;
    gs.cfg = duality_config(type, m, n);
    gs.kind = (n == 2) ? AlgebraKind::heisenberg : AlgebraKind::so_flat;
    gs.algebra_size = n;
    gs.expected_level = gs.cfg.flavor_count();
    gs.name = "dual so_" + std::to_string(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            FlatGenerator g;
            g.i = i;
            g.j = j;
            g.label = "E_" + std::to_string(i) + std::to_string(j);
            g.current = Bilinear(gs.cfg);
            for (int k = 1; k <= gs.cfg.flavor_count(); ++k)
                g.current.add_term(gs.cfg.species_real(k, i), gs.cfg.species_real(k, j),
                                   CycScalar(1));
            gs.flat.push_back(std::move(g));
        }
    return gs;
}

// Reads a weight-1 state back as a bilinear coefficient table.
inline Bilinear bilinear_from_state(const FockVector& v) {
    Bilinear out(v.config());
    for (const auto& [mono, c] : v.terms()) {
        if (mono.modes.size() != 2 || mono.modes[0].level2 != -1 || mono.modes[1].level2 != -1)
            throw std::invalid_argument("state is not a sum of level -1/2 bilinears");
        out.add_term(mono.modes[0].species, mono.modes[1].species, c);
    }
    return out;
}

// Chevalley presentation of the dual so_n family, n = 2N >= 4: the even
// orthogonal frame runs over slots at fixed flavor, summed over flavors.
inline GeneratorSet dual_chevalley(AlgebraType type, int m, int n) {
    if (n % 2 != 0 || n < 4)
        throw std::invalid_argument("dual Chevalley triples need even n >= 4");
    GeneratorSet gs;
    gs.cfg = duality_config(type, m, n);
    gs.kind = AlgebraKind::so_chevalley;
    gs.algebra_size = n;
    gs.expected_level = gs.cfg.flavor_count();
    gs.name = "dual so_" + std::to_string(n) + " chevalley";
    std::vector<ChevalleyTriple> acc;
    for (int i = 1; i <= gs.cfg.flavor_count(); ++i)
        detail::merge_triples(acc, detail::so_even_frame(gs.cfg, detail::flavor_species(gs.cfg, i)));
    gs.triples = std::move(acc);
    return gs;
}

}  // namespace levelrank
