#include <catch2/catch_amalgamated.hpp>

#include "levelrank/fock.hpp"

#include <algorithm>
#include <random>

using namespace levelrank;

namespace {

// Exhaustive independent enumeration: all strictly increasing mode lists over
// (species, level) pairs with the prescribed total weight.
int brute_force_count(const FockConfig& cfg, int weight2, Parity parity) {
    std::vector<Mode> all;
    for (int lvl = -weight2 | 1; lvl <= -1; lvl += 2)
        for (int s = 0; s < cfg.species_count(); ++s)
            all.push_back(Mode{static_cast<int16_t>(s), static_cast<int16_t>(lvl)});
    std::sort(all.begin(), all.end());
    int count = 0;
    // Subsets via recursion (sets here stay tiny).
    auto rec = [&](auto&& self, std::size_t idx, int w2, int len) -> void {
        if (w2 == weight2) {
            bool odd = len % 2;
            if (parity == Parity::any || (parity == Parity::odd) == odd) ++count;
        }
        if (w2 >= weight2 || idx >= all.size()) return;
        self(self, idx + 1, w2, len);                           // skip
        self(self, idx + 1, w2 - all[idx].level2, len + 1);     // take
    };
    rec(rec, 0, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("normalize_modes") {
    FockConfig cfg = FockConfig::d_real(2, 1);
    Mode a{static_cast<int16_t>(cfg.species_real(1, 1)), -1};
    Mode b{static_cast<int16_t>(cfg.species_real(2, 1)), -3};

    SECTION("one transposition") {
        auto r = normalize_modes({a, b});  // b < a canonically (level -3/2 first)
        REQUIRE(r);
        CHECK(r->second == -1);
        CHECK(r->first.modes == std::vector<Mode>{b, a});
    }
    SECTION("repeated mode vanishes") { CHECK(!normalize_modes({a, a})); }
    SECTION("sorted input keeps sign +1") {
        auto r = normalize_modes({b, a});
        REQUIRE(r);
        CHECK(r->second == 1);
    }
    SECTION("rejects non-negative levels") {
        CHECK_THROWS_AS(normalize_modes({Mode{0, 1}}), std::invalid_argument);
    }
}

TEST_CASE("sorting sign is the permutation sign") {
    FockConfig cfg = FockConfig::d_real(2, 2);
    std::vector<Mode> base;
    for (int s = 0; s < 6; ++s)
        base.push_back(Mode{static_cast<int16_t>(s), static_cast<int16_t>(-1 - 2 * (s % 2))});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Mode> shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // Independent parity: count inversions of the permutation.
        int inversions = 0;
        for (std::size_t x = 0; x < shuffled.size(); ++x)
            for (std::size_t y = x + 1; y < shuffled.size(); ++y)
                if (shuffled[y] < shuffled[x]) ++inversions;
        auto r = normalize_modes(shuffled);
        REQUIRE(r);
        CHECK(r->second == ((inversions % 2) ? -1 : 1));
    }
}

TEST_CASE("mode action on states") {
    FockConfig cfg = FockConfig::d_complex(1, 1);
    int plus = cfg.species_complex(1, 1, false);
    int minus = cfg.species_complex(1, 1, true);
    FockVector vac = FockVector::vacuum(cfg);

    SECTION("contraction against the conjugate partner") {
        FockVector v = apply_mode(minus, -1, vac);  // psi^-(-1/2)|0>
        CHECK(apply_mode(plus, 1, v) == vac);
    }
    SECTION("positive modes kill the vacuum") {
        CHECK(apply_mode(plus, 1, vac).is_zero());
        CHECK(apply_mode(minus, 3, vac).is_zero());
    }
    SECTION("nilpotence") {
        FockVector v = apply_mode(minus, -1, vac);
        CHECK(apply_mode(minus, -1, v).is_zero());
    }
    SECTION("weight homogeneity") {
        FockVector v = apply_mode(minus, -3, apply_mode(plus, -1, vac));
        CHECK(v.homogeneous_weight2() == 4);
        CHECK(apply_mode(plus, 3, v).homogeneous_weight2() == 1);
        CHECK(apply_mode(minus, -1, v).homogeneous_weight2() == 5);
    }
}

TEST_CASE("weight bases") {
    SECTION("choose 2 of 4 level -1/2 modes") {
        FockConfig cfg = FockConfig::d_real(2, 1);
        CHECK(weight_basis(cfg, 2, Parity::even).size() == 6);
    }
    SECTION("weight 1/2 odd basis lists every species") {
        for (FockConfig cfg : {FockConfig::d_real(2, 3), FockConfig::b_real(1, 2),
                               FockConfig::d_complex(2, 2)}) {
            auto b = weight_basis(cfg, 1, Parity::odd);
            CHECK(static_cast<int>(b.size()) == cfg.species_count());
        }
    }
    SECTION("weight 2 even, complex m=1 n=1, against exhaustive oracle") {
        FockConfig cfg = FockConfig::d_complex(1, 1);
        auto b = weight_basis(cfg, 4, Parity::even);
        CHECK(b.size() == 4);
        CHECK(static_cast<int>(b.size()) == brute_force_count(cfg, 4, Parity::even));
    }
    SECTION("oracle agreement across a sweep") {
        FockConfig cfg = FockConfig::b_real(1, 2);
        for (int w2 = 0; w2 <= 6; ++w2)
            for (Parity p : {Parity::any, Parity::even, Parity::odd})
                CHECK(static_cast<int>(weight_basis(cfg, w2, p).size()) ==
                      brute_force_count(cfg, w2, p));
    }
    SECTION("deterministic and canonically ordered") {
        FockConfig cfg = FockConfig::d_real(2, 2);
        auto a = weight_basis(cfg, 4, Parity::even);
        auto b = weight_basis(cfg, 4, Parity::even);
        CHECK(a == b);
        CHECK(std::is_sorted(a.begin(), a.end()));
    }
}

TEST_CASE("anticommutation relations hold on small bases") {
    // [psi_a(r), psi_b(s)]_+ = delta(a, conj b) delta_{r+s,0} on every basis
    // vector, for both D schemes and the B scheme.
    for (FockConfig cfg : {FockConfig::d_complex(1, 2), FockConfig::d_real(1, 2),
                           FockConfig::b_real(1, 1)}) {
        for (int w2 = 0; w2 <= 4; ++w2) {
            for (const Monomial& mono : weight_basis(cfg, w2, Parity::any)) {
                FockVector v(cfg);
                v.add(mono, CycScalar::one());
                for (int a = 0; a < cfg.species_count(); ++a)
                    for (int b = a; b < cfg.species_count(); ++b)
                        for (int ra = -5; ra <= 5; ra += 2)
                            for (int rb = -5; rb <= 5; rb += 2) {
                                FockVector sum = apply_mode(a, ra, apply_mode(b, rb, v)) +
                                                 apply_mode(b, rb, apply_mode(a, ra, v));
                                bool delta = (cfg.conj(a) == b) && (ra + rb == 0);
                                if (delta)
                                    REQUIRE(sum == v);
                                else
                                    REQUIRE(sum.is_zero());
                            }
            }
        }
    }
}

TEST_CASE("basis change between complex and real D-type modes") {
    FockConfig real_cfg = FockConfig::d_real(2, 2);
    FockConfig cplx_cfg = FockConfig::d_complex(2, 2);

    SECTION("defining image of one real mode") {
        FockVector v = apply_mode(real_cfg.species_real(1, 1), -1, FockVector::vacuum(real_cfg));
        FockVector img = change_basis(v, Scheme::DComplex);
        FockVector expect(cplx_cfg);
        FockVector vac = FockVector::vacuum(cplx_cfg);
        expect += CycScalar::inv_sqrt2() *
                  apply_mode(cplx_cfg.species_complex(1, 1, false), -1, vac);
        expect += CycScalar::inv_sqrt2() *
                  apply_mode(cplx_cfg.species_complex(1, 1, true), -1, vac);
        CHECK(img == expect);
    }
    SECTION("roundtrip is the identity") {
        FockVector v(real_cfg);
        for (const Monomial& mono : weight_basis(real_cfg, 3, Parity::any)) {
            FockVector unit(real_cfg);
            unit.add(mono, CycScalar::one());
            CHECK(change_basis(change_basis(unit, Scheme::DComplex), Scheme::DReal) == unit);
        }
    }
    SECTION("mode equivariance under the substitution") {
        // psi_{m+k,j}(r) pushed through the basis change acts as
        // -i/sqrt2 (psi^+_{kj}(r) - psi^-_{kj}(r)).
        FockVector v = apply_mode(real_cfg.species_real(2, 1), -3,
                                  apply_mode(real_cfg.species_real(3, 2), -1,
                                             FockVector::vacuum(real_cfg)));
        FockVector lhs = change_basis(apply_mode(real_cfg.species_real(3, 1), -1, v),
                                      Scheme::DComplex);
        FockVector w = change_basis(v, Scheme::DComplex);
        CycScalar c = -(CycScalar::i() * CycScalar::inv_sqrt2());
        FockVector rhs = c * apply_mode(cplx_cfg.species_complex(1, 1, false), -1, w) -
                         c * apply_mode(cplx_cfg.species_complex(1, 1, true), -1, w);
        CHECK(lhs == rhs);
    }
    SECTION("B scheme is rejected") {
        FockVector v = FockVector::vacuum(FockConfig::b_real(1, 1));
        CHECK_THROWS_AS(change_basis(v, Scheme::DComplex), std::invalid_argument);
    }
}

TEST_CASE("fock vector text format") {
    FockConfig cfg = FockConfig::d_real(1, 2);
    FockVector v = apply_mode(cfg.species_real(2, 1), -3,
                              apply_mode(cfg.species_real(1, 2), -1, FockVector::vacuum(cfg)));
    CHECK(v.to_text() == "1/1,0/1,0/1,0/1 | Dr:2,1(-3/2) Dr:1,2(-1/2)\n");
    CHECK(FockVector::vacuum(cfg).to_text() == "1/1,0/1,0/1,0/1 | 1\n");
}
