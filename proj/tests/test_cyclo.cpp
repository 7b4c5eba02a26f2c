#include "hnl/cyclo.hpp"

#include <doctest.h>

#include <random>

using namespace hnl;

namespace {
Cyclo random_cyclo(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    return Cyclo(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}
}  // namespace

TEST_CASE("omega identities") {
    Cyclo w = Cyclo::omega();
    CHECK(w * w == Cyclo::omega2());
    CHECK(w * w * w == Cyclo(1));
    CHECK(Cyclo(1) + w + w * w == Cyclo(0));
    CHECK(w.conj() == Cyclo::omega2());
    CHECK(w.norm2() == Rational(1));
}

TEST_CASE("ring laws and field structure, fuzzed") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        Cyclo x = random_cyclo(rng), y = random_cyclo(rng), z = random_cyclo(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x * x.conj() == Cyclo(x.norm2()));
        if (!x.is_zero()) CHECK(x * x.inverse() == Cyclo(1));
    }
}

TEST_CASE("to_complex is a ring homomorphism") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        Cyclo x = random_cyclo(rng), y = random_cyclo(rng);
        auto lhs = (x * y).to_complex();
        auto rhs = x.to_complex() * y.to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-12);
        CHECK(std::abs(x.conj().to_complex() - std::conj(x.to_complex())) < 1e-12);
    }
    // omega really is the primitive cube root in the upper half plane
    auto w = Cyclo::omega().to_complex();
    CHECK(w.real() == doctest::Approx(-0.5));
    CHECK(w.imag() == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(3)) == "3");
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_from_string("7/3") == Rational(7, 3));
    CHECK(rational_from_string("-4") == Rational(-4));
    CHECK_THROWS(rational_from_string("1/0"));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    for (int t = 0; t < 100; ++t) {
        Rational r(num(rng), den(rng));
        CHECK(rational_from_string(rational_to_string(r)) == r);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Cyclo(0).inverse(), std::invalid_argument);
}
