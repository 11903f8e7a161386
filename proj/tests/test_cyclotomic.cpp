#include <catch2/catch_amalgamated.hpp>

#include "levelrank/cyclotomic.hpp"

#include <random>

using namespace levelrank;

namespace {

CycScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rational c[4];
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return CycScalar(c[0], c[1], c[2], c[3]);
}

}  // namespace

TEST_CASE("zeta powers and square roots") {
    CycScalar z = CycScalar::zeta();
    CHECK(z * z == CycScalar::i());
    CHECK(CycScalar::i() * CycScalar::i() == CycScalar(-1));
    CHECK(CycScalar::sqrt2() * CycScalar::sqrt2() == CycScalar(2));
    CHECK(CycScalar::sqrt2() * CycScalar::inv_sqrt2() == CycScalar::one());
    CHECK(CycScalar(1) + CycScalar(0) == CycScalar(1));
}

TEST_CASE("inverses") {
    CHECK(CycScalar::i().inverse() == -CycScalar::i());
    CHECK(CycScalar(2).inverse() == CycScalar(make_rational(1, 2)));
    // 1/sqrt2 = sqrt2/2
    CHECK(CycScalar::sqrt2().inverse() == CycScalar::half() * CycScalar::sqrt2());
    CHECK_THROWS_AS(CycScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random quadruples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar::one());
    }
}

TEST_CASE("Q(i) embeds via i -> zeta^2") {
    // Arithmetic of x + y i carried through the embedding.
    std::mt19937 rng(7);
    auto embed = [](const Rational& re, const Rational& im) {
        return CycScalar(re) + CycScalar(im) * CycScalar::i();
    };
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Rational xr = d(rng), xi = d(rng), yr = d(rng), yi = d(rng);
        CycScalar lhs = embed(xr, xi) * embed(yr, yi);
        CycScalar rhs = embed(xr * yr - xi * yi, xr * yi + xi * yr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("serialization is four lowest-term fractions") {
    CycScalar a(make_rational(1, 2), make_rational(-2, 6), Rational(0), Rational(3));
    CHECK(a.str() == "1/2,-1/3,0/1,3/1");
    CHECK(CycScalar::inv_sqrt2().str() == "0/1,1/2,0/1,-1/2");
}
