#include <doctest.h>

#include <cmath>

#include "seqlab/error.hpp"
#include "seqlab/modulus.hpp"

using namespace seqlab;

TEST_CASE("built-in moduli") {
    auto id = make_modulus("id");
    CHECK(id(3.0) == 3.0);
    CHECK(id.unbounded());
    auto lg = make_modulus("log1p");
    CHECK(lg(0.0) == 0.0);
    CHECK(make_modulus("pow:0.5")(4.0) == doctest::Approx(2.0));
    auto b = make_modulus("bounded");
    CHECK_FALSE(b.unbounded());
    CHECK(b(1.0) == 0.5);

    CHECK_THROWS_AS(make_modulus("pow:0"), SpecError);
    CHECK_THROWS_AS(make_modulus("pow:1.5"), SpecError);
    CHECK_THROWS_AS(make_modulus("pow:-1"), SpecError);
    CHECK_THROWS_AS(make_modulus("square"), SpecError);
}

TEST_CASE("axiom reports") {
    std::vector<double> g{1.0, 2.0, 3.0};
    auto r = check_modulus_axioms(make_modulus("id"), g);
    CHECK(r.all_passed());

    Modulus sq("square", [](double x) { return x * x; }, true);
    auto bad = check_modulus_axioms(sq, g);
    const auto* sub = bad.find("subadditive");
    REQUIRE(sub != nullptr);
    CHECK_FALSE(sub->passed);
    REQUIRE(sub->witness.has_value());
    CHECK(sub->witness->first == 1.0);
    CHECK(sub->witness->second == 1.0);
    CHECK(sq(2.0) > sq(1.0) + sq(1.0));

    std::vector<double> g2{0.1, 1.0, 10.0};
    CHECK(check_modulus_axioms(make_modulus("pow:0.5"), g2).all_passed());

    Modulus jump("jump", [](double x) { return x > 0 ? 1.0 + x : 0.0; }, true);
    auto j = check_modulus_axioms(jump, g);
    CHECK_FALSE(j.find("right_continuous_at_zero")->passed);

    Modulus shifted("shifted", [](double x) { return x + 1.0; }, true);
    CHECK_FALSE(check_modulus_axioms(shifted, g).find("zero")->passed);

    Modulus dec("dec", [](double x) { return x == 0 ? 0.0 : 1.0 / x; }, false);
    CHECK_FALSE(check_modulus_axioms(dec, g).find("monotone")->passed);

    CHECK_THROWS_AS(check_modulus_axioms(make_modulus("id"), std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(check_modulus_axioms(make_modulus("id"), std::vector<double>{-1.0}), DomainError);
}

TEST_CASE("built-ins pass their own suites on the default grid") {
    auto grid = log_grid();
    CHECK(grid.front() == doctest::Approx(1e-6));
    CHECK(grid.back() == doctest::Approx(1e6));
    for (const char* spec : {"id", "log1p", "pow:0.5", "pow:1", "bounded"}) {
        CAPTURE(spec);
        CHECK(check_modulus_axioms(make_modulus(spec), grid).all_passed());
    }
}

TEST_CASE("subadditivity and monotonicity hold on all sampled pairs") {
    auto grid = log_grid(1e-6, 1e6, 3);
    for (const char* spec : {"id", "log1p", "pow:0.5", "pow:0.9", "pow:1"}) {
        auto f = make_modulus(spec);
        for (double x : grid)
            for (double y : grid) {
                REQUIRE(f(x + y) <= f(x) + f(y) + 1e-12 * std::max(1.0, f(x) + f(y)));
                if (x <= y) REQUIRE(f(x) <= f(y) + 1e-12);
            }
    }
    auto b = make_modulus("bounded");
    for (double x : grid) CHECK(b(x) <= 1.0);
    for (const char* spec : {"id", "log1p", "pow:0.5"}) CHECK(make_modulus(spec)(1e300) > 100.0);
}
