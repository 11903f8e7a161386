#include <catch2/catch_amalgamated.hpp>

#include "levelrank/currents.hpp"
#include "levelrank/orbifold.hpp"

using namespace levelrank;

TEST_CASE("sign automorphisms") {
    FockConfig cfg = FockConfig::d_real(2, 3);
    SignAutomorphism s1 = SignAutomorphism::sigma(3, 1);

    SECTION("same-slot bilinear states are fixed") {
        Bilinear x(cfg);
        x.add_term(cfg.species_real(1, 1), cfg.species_real(3, 1), CycScalar::one());
        CHECK(sigma_action(s1, x.state()) == x.state());
    }
    SECTION("involution") {
        FockVector v = FockVector::vacuum(cfg);
        v = apply_mode(cfg.species_real(2, 1), -1, v);
        v = apply_mode(cfg.species_real(4, 3), -3, v);
        CHECK(sigma_action(s1, sigma_action(s1, v)) == v);
        CHECK(sigma_action(s1, v) == -CycScalar::one() * v);
    }
    SECTION("serialized as sign strings") {
        CHECK(s1.str() == "-++");
        CHECK(SignAutomorphism::sigma(3, 2).compose(s1).str() == "--+");
    }
}

TEST_CASE("sigma intertwines single modes by the slot sign") {
    FockConfig cfg = FockConfig::d_real(1, 2);
    SignAutomorphism s2 = SignAutomorphism::sigma(2, 2);
    for (int w2 = 0; w2 <= 3; ++w2)
        for (const Monomial& mono : weight_basis(cfg, w2, Parity::any)) {
            FockVector v(cfg);
            v.add(mono, CycScalar::one());
            for (int sp = 0; sp < cfg.species_count(); ++sp)
                for (int lvl : {-3, -1, 1, 3}) {
                    FockVector lhs = sigma_action(s2, apply_mode(sp, lvl, v));
                    FockVector rhs = apply_mode(sp, lvl, sigma_action(s2, v));
                    if (cfg.slot(sp) == 2) rhs.scale(CycScalar(-1));
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("sigma commutes with slot-diagonal current modes") {
    GeneratorSet diag = diagonal_generators(AlgebraType::D, 2, 2);
    SignAutomorphism s1 = SignAutomorphism::sigma(2, 1);
    FockVector v(diag.cfg);
    for (const Monomial& mono : weight_basis(diag.cfg, 2, Parity::even))
        v.add(mono, CycScalar::one());
    for (const auto& [label, x] : diag.all()) {
        CHECK(x->is_slot_diagonal());
        for (int p = -2; p <= 2; ++p)
            CHECK(sigma_action(s1, x->apply(p, v)) == x->apply(p, sigma_action(s1, v)));
    }
}

TEST_CASE("group closure and fixed monomials") {
    FockConfig cfg = FockConfig::d_real(2, 2);
    GroupDescriptor full = GroupDescriptor::full(2);
    CHECK(full.closure().size() == 4);

    SECTION("trivial group fixes the whole ambient") {
        GroupDescriptor none = GroupDescriptor::trivial(2);
        CHECK(fixed_monomials(none, cfg, 2, Parity::even).size() ==
              weight_basis(cfg, 2, Parity::even).size());
    }
    SECTION("same-slot pairs are exactly the fixed weight-1 states") {
        auto fixed = fixed_monomials(full, cfg, 2, Parity::even);
        CHECK(fixed.size() == 12);  // 2 slots x C(4,2)
        for (const auto& mono : fixed)
            CHECK(cfg.slot(mono.modes[0].species) == cfg.slot(mono.modes[1].species));
    }
    SECTION("dimension equals the group character average") {
        for (int w2 : {0, 2, 4, 5, 6})
            CHECK(fixed_dimension_matches_trace(full, cfg, w2, Parity::even));
    }
}

TEST_CASE("fixed weight-1 dimension at D m=2 n=3") {
    FockConfig cfg = FockConfig::d_real(2, 3);
    auto fixed = fixed_monomials(GroupDescriptor::full(3), cfg, 2, Parity::even);
    CHECK(fixed.size() == 18);  // 3 slots x dim so_4
}
