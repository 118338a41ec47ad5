#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aggsim/units.hpp"

using namespace aggsim;

TEST_CASE("dB to linear basics") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(db_to_linear(154.0) == doctest::Approx(2.5119e15).epsilon(1e-4));
    CHECK(linear_to_db(1000.0) == doctest::Approx(30.0));
    CHECK(dbm_to_watts(20.0) == doctest::Approx(0.1));
    CHECK(watts_to_dbm(0.1) == doctest::Approx(20.0));
}

TEST_CASE("round trip is identity across the working range") {
    for (int i = -200; i <= 200; ++i) {
        const double x = static_cast<double>(i);
        CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(1e-12));
    }
    for (double v : {1e-18, 1e-9, 0.5, 1.0, 3.7, 1e12}) {
        CHECK(db_to_linear(linear_to_db(v)) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(linear_to_db(0.0), std::domain_error);
    CHECK_THROWS_AS(linear_to_db(-1.0), std::domain_error);
    CHECK_THROWS_AS(db_to_linear(std::nan("")), std::domain_error);
}
