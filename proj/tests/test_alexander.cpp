#include "adjlab/alexander.hpp"

#include <doctest.h>

using namespace adjlab;

TEST_CASE("alexander: parsing and degree examples")
{
    auto trefoil = AlexanderPolynomial::parse("t - 1 + t^-1");
    CHECK(alexander_degree(trefoil) == 1);
    CHECK(trefoil.coeff(1) == 1);
    CHECK(trefoil.coeff(0) == -1);
    CHECK(trefoil.coeff(-1) == 1);

    CHECK(alexander_degree(AlexanderPolynomial::parse("1")) == 0);
    CHECK(AlexanderPolynomial::parse("1").is_constant_one());

    auto cinq = AlexanderPolynomial::parse("t^2 - t + 1 - t^-1 + t^-2");
    CHECK(alexander_degree(cinq) == 2);
    CHECK(cinq == AlexanderPolynomial::torus_knot_2_odd(2));
}

TEST_CASE("alexander: whitespace-insensitive grammar and round trip")
{
    auto a = AlexanderPolynomial::parse("t^2-t+1-t^-1+t^-2");
    auto b = AlexanderPolynomial::parse("  t^2 - t + 1 - t^-1+ t^-2 ");
    CHECK(a == b);
    CHECK(a.to_string() == "t^2 - t + 1 - t^-1 + t^-2");
    CHECK(AlexanderPolynomial::parse(a.to_string()) == a);

    auto c = AlexanderPolynomial::parse("3t - 5 + 3t^-1");
    CHECK(c.coeff(1) == 3);
    CHECK(c.to_string() == "3t - 5 + 3t^-1");
    CHECK(AlexanderPolynomial::parse(c.to_string()) == c);
}

TEST_CASE("alexander: validation")
{
    // not symmetric
    CHECK_THROWS_AS(AlexanderPolynomial::parse("t - 1"), std::invalid_argument);
    // symmetric but evaluates to 3 at t = 1
    CHECK_THROWS_AS(AlexanderPolynomial::parse("t + 1 + t^-1"), std::invalid_argument);
    // cancels to zero
    CHECK_THROWS_AS(AlexanderPolynomial::parse("t - t"), std::invalid_argument);
    CHECK_THROWS_AS(AlexanderPolynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(AlexanderPolynomial::parse("t^2 +"), std::invalid_argument);
}

TEST_CASE("alexander: torus knot family has the expected degrees")
{
    CHECK(AlexanderPolynomial::torus_knot_2_odd(0).is_constant_one());
    CHECK(AlexanderPolynomial::torus_knot_2_odd(1) ==
          AlexanderPolynomial::parse("t - 1 + t^-1"));
    for (int g = 0; g <= 8; ++g) {
        auto p = AlexanderPolynomial::torus_knot_2_odd(g);
        CHECK(alexander_degree(p) == g);
        Int at_one = 0;
        for (const auto& [e, c] : p.coeffs()) at_one += c;
        CHECK(at_one == 1);
    }
}
