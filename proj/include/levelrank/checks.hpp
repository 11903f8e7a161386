#pragma once

// Machine checks for the generator catalogs: Chevalley/Serre relations
// against the orthogonal root data, affine levels from central terms, and
// mutual commutation of current families.

#include "currents.hpp"
#include "linalg.hpp"

#include <string>
#include <vector>

namespace levelrank {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    int failures() const {
        int f = 0;
        for (const auto& i : items)
            if (!i.pass) ++f;
        return f;
    }
};

// Simple-root data of so_N in orthonormal coordinates, long roots of norm 2.
struct OrthogonalRoots {
    int size = 0;  // the N of so_N
    std::vector<std::vector<int>> simple;

    explicit OrthogonalRoots(int n) : size(n) {
        int rank = n / 2;
        bool odd = n % 2;
        if ((odd && rank < 1) || (!odd && rank < 2))
            throw std::invalid_argument("root data needs so_3 or so_{2h}, h >= 2");
        for (int k = 1; k < rank; ++k) {
            std::vector<int> a(rank, 0);
            a[k - 1] = 1;
            a[k] = -1;
            simple.push_back(a);
        }
        std::vector<int> last(rank, 0);
        if (odd) {
            last[rank - 1] = 1;  // short root e_rank
        } else {
            last[rank - 2] = 1;  // e_{rank-1} + e_rank
            last[rank - 1] = 1;
        }
        simple.push_back(last);
    }

    int rank() const { return static_cast<int>(simple.size()); }
    int inner(int i, int j) const {
        int s = 0;
        for (std::size_t k = 0; k < simple[i].size(); ++k) s += simple[i][k] * simple[j][k];
        return s;
    }
    // 2(a_i, a_j) / (a_i, a_i); integral for B and D data.
    int cartan(int i, int j) const {
        int num = 2 * inner(i, j);
        int den = inner(i, i);
        if (num % den) throw std::logic_error("non-integral Cartan entry");
        return num / den;
    }
};

namespace detail {

inline bool state_consistency(const Bilinear& x, const Bilinear& y, const BracketResult& br) {
    // Dual route through the module action: X(0) on the state of Y gives the
    // bracket state, X(1) gives the central term on the vacuum.
    FockVector ystate = y.state();
    if (!(x.apply(0, ystate) == br.z.state())) return false;
    FockVector expect = FockVector::vacuum(x.config());
    expect.scale(br.central);
    return x.apply(1, ystate) == expect;
}

}  // namespace detail

// Chevalley relations, Serre relations, and affine central terms of a
// catalog, all symbolic plus the zero/one-mode state cross-checks.
inline CheckReport verify_lie_structure(const GeneratorSet& gs) {
    CheckReport rep;
    rep.title = gs.name;
    const CycScalar level(gs.expected_level);

    if (gs.kind == AlgebraKind::heisenberg) {
        for (const auto& g : gs.flat) {
            auto br = bracket(g.current, g.current);
            rep.add("[" + g.label + "," + g.label + "] lie part", br.z.is_zero());
            rep.add(g.label + " level", br.central == -level,
                    "central " + br.central.str());
            rep.add(g.label + " state consistency",
                    detail::state_consistency(g.current, g.current, br));
        }
        return rep;
    }

    if (gs.kind == AlgebraKind::so_flat) {
        // [E_ij, E_kl] = d_jk E_il - d_ik E_jl - d_jl E_ik + d_il E_jk,
        // central = level (d_il d_jk - d_ik d_jl).
        auto entry = [&](int i, int j) -> Bilinear {
            Bilinear out(gs.cfg);
            if (i == j) return out;
            for (const auto& g : gs.flat) {
                if (g.i == i && g.j == j) return g.current;
                if (g.i == j && g.j == i) return -Bilinear(g.current);
            }
            throw std::logic_error("missing flat generator");
        };
        for (const auto& a : gs.flat)
            for (const auto& b : gs.flat) {
                auto br = bracket(a.current, b.current);
                Bilinear expect(gs.cfg);
                auto kd = [](int x, int y) { return x == y ? 1 : 0; };
                if (kd(a.j, b.i)) expect += entry(a.i, b.j);
                if (kd(a.i, b.i)) expect += -entry(a.j, b.j);
                if (kd(a.j, b.j)) expect += -entry(a.i, b.i);
                if (kd(a.i, b.j)) expect += entry(a.j, b.i);
                bool lie_ok = br.z == expect;
                int cf = kd(a.i, b.j) * kd(a.j, b.i) - kd(a.i, b.i) * kd(a.j, b.j);
                bool central_ok = br.central == CycScalar(cf) * level;
                rep.add("[" + a.label + "," + b.label + "]", lie_ok && central_ok);
                rep.add("[" + a.label + "," + b.label + "] state consistency",
                        detail::state_consistency(a.current, b.current, br));
            }
        return rep;
    }

    OrthogonalRoots roots(gs.algebra_size);
    if (roots.rank() != static_cast<int>(gs.triples.size()))
        throw std::invalid_argument("triple count does not match the root system rank");
    const auto& t = gs.triples;
    int r = roots.rank();

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::string ij = t[i].label + "," + t[j].label;
            {
                auto br = bracket(t[i].cartan, t[j].raising);
                Bilinear expect = t[j].raising;
                expect.scale(CycScalar(roots.cartan(i, j)));
                rep.add("[h_" + ij + "] on e", br.z == expect && br.central.is_zero());
            }
            {
                auto br = bracket(t[i].cartan, t[j].lowering);
                Bilinear expect = t[j].lowering;
                expect.scale(CycScalar(-roots.cartan(i, j)));
                rep.add("[h_" + ij + "] on f", br.z == expect && br.central.is_zero());
            }
            {
                auto br = bracket(t[i].raising, t[j].lowering);
                bool ok;
                if (i == j) {
                    // level recovered from c(e_i, f_i) (a_i, a_i) / 2
                    CycScalar lv = br.central * CycScalar(make_rational(roots.inner(i, i), 2));
                    ok = br.z == t[i].cartan && lv == level;
                } else {
                    ok = br.z.is_zero() && br.central.is_zero();
                }
                rep.add("[e_" + t[i].label + ",f_" + t[j].label + "]", ok);
            }
            {
                auto br = bracket(t[i].cartan, t[j].cartan);
                // c(h_i, h_j) = level (a_i^vee, a_j^vee)
                CycScalar expect = CycScalar(make_rational(
                                       4 * roots.inner(i, j),
                                       roots.inner(i, i) * roots.inner(j, j))) *
                                   level;
                rep.add("[h_" + ij + "]", br.z.is_zero() && br.central == expect);
            }
            if (i != j) {
                // (ad e_i)^{1 - a_ij} e_j = 0 and the f-side mirror.
                int steps = 1 - roots.cartan(i, j);
                Bilinear ade = t[j].raising;
                Bilinear adf = t[j].lowering;
                for (int s = 0; s < steps; ++s) {
                    ade = bracket(t[i].raising, ade).z;
                    adf = bracket(t[i].lowering, adf).z;
                }
                rep.add("serre e_" + ij, ade.is_zero());
                rep.add("serre f_" + ij, adf.is_zero());
            }
        }

    // Dual-route consistency on states for every catalog pair.
    auto gens = gs.all();
    bool states_ok = true;
    for (const auto& [la, xa] : gens)
        for (const auto& [lb, xb] : gens)
            if (!detail::state_consistency(*xa, *xb, bracket(*xa, *xb))) states_ok = false;
    rep.add("state consistency across catalog", states_ok);
    return rep;
}

struct MutualCommutationOptions {
    int weight2_cutoff = 6;       // ambient basis bound for the operator scan
    int operator_weight2 = 4;     // matrix spot-check weight bound
    int operator_mode_bound = 3;  // matrix spot-check |p|, |q| bound
};

// Commutation of two current families.
//   (1) symbolic: every bracket is (0, 0) -- this settles [X(p), Y(q)] = 0
//       for all integer p, q at once;
//   (2) module route: X(j) kills the state of Y for every j >= 0 (and
//       symmetrically), the non-negative products behind the commutator
//       formula;
//   (3) matrix spot check: [X(p), Y(q)] v = 0 on the small-weight basis.
inline CheckReport verify_mutual_commutation(const GeneratorSet& a, const GeneratorSet& b,
                                             const MutualCommutationOptions& opt = {}) {
    if (!(a.cfg == b.cfg)) throw std::invalid_argument("Fock configuration mismatch");
    CheckReport rep;
    rep.title = a.name + " vs " + b.name;
    auto ga = a.all();
    auto gb = b.all();

    bool symbolic_ok = true, products_ok = true;
    for (const auto& [la, xa] : ga)
        for (const auto& [lb, xb] : gb) {
            auto br = bracket(*xa, *xb);
            if (!br.z.is_zero() || !br.central.is_zero()) {
                symbolic_ok = false;
                rep.add("bracket " + la + " | " + lb, false,
                        "central " + br.central.str());
            }
            FockVector bs = xb->state();
            FockVector as = xa->state();
            for (int j = 0; j <= 3; ++j) {
                if (!xa->apply(j, bs).is_zero()) products_ok = false;
                if (!xb->apply(j, as).is_zero()) products_ok = false;
            }
        }
    rep.add("all symbolic brackets vanish", symbolic_ok);
    rep.add("non-negative cross products vanish", products_ok);

    int w2max = std::min(opt.weight2_cutoff, opt.operator_weight2);
    int pb = opt.operator_mode_bound;
    long long failures = 0;
    for (int w2 = 0; w2 <= w2max; ++w2)
        for (const Monomial& mono : weight_basis(a.cfg, w2, Parity::any)) {
            FockVector v(a.cfg);
            v.add(mono, CycScalar::one());
            // First-level images, hoisted out of the mode-pair loop.
            std::vector<std::vector<FockVector>> av(ga.size()), bv(gb.size());
            for (std::size_t ia = 0; ia < ga.size(); ++ia)
                for (int p = -pb; p <= pb; ++p) av[ia].push_back(ga[ia].second->apply(p, v));
            for (std::size_t ib = 0; ib < gb.size(); ++ib)
                for (int q = -pb; q <= pb; ++q) bv[ib].push_back(gb[ib].second->apply(q, v));
            for (std::size_t ia = 0; ia < ga.size(); ++ia)
                for (std::size_t ib = 0; ib < gb.size(); ++ib)
                    for (int p = -pb; p <= pb; ++p)
                        for (int q = -pb; q <= pb; ++q) {
                            const FockVector& xv = av[ia][p + pb];
                            const FockVector& yv = bv[ib][q + pb];
                            if (!(gb[ib].second->apply(q, xv) == ga[ia].second->apply(p, yv)))
                                ++failures;
                        }
        }
    rep.add("operator commutators vanish on the scanned basis", failures == 0,
            failures ? std::to_string(failures) + " nonzero commutators" : "");
    return rep;
}

}  // namespace levelrank
