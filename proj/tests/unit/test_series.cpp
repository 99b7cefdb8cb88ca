#include "doctest.h"

#include "mulink/errors.hpp"
#include "mulink/series.hpp"

using namespace mulink;

namespace {
std::string var_name(int v) { return std::string("x_") + char('a' + v); }
} // namespace

TEST_CASE("meridian products") {
    Series m = series_mul(Series::meridian(2, 3, 0), Series::meridian(2, 3, 1));
    CHECK(m.coeff({}) == 1);
    CHECK(m.coeff({0}) == 1);
    CHECK(m.coeff({1}) == 1);
    CHECK(m.coeff({0, 1}) == 1);
    CHECK(m.coeff({1, 0}) == 0);

    Series cube = Series::meridian(1, 2, 0);
    cube = series_mul(series_mul(cube, cube), cube);
    CHECK(cube.coeff({0}) == 3);
    CHECK(cube.terms().size() == 2);
}

TEST_CASE("geometric inverse") {
    Series inv = series_inverse(Series::meridian(1, 3, 0));
    CHECK(inv.coeff({0}) == -1);
    CHECK(inv.coeff({0, 0}) == 1);
    CHECK(series_mul(Series::meridian(1, 3, 0), inv) == Series::one(1, 3));

    Series no_unit = Series::variable(1, 3, 0);
    CHECK_THROWS_AS(series_inverse(no_unit), ComputeError);
}

TEST_CASE("minimum nonconstant degree") {
    Series s = series_mul(Series::variable(2, 4, 0), Series::variable(2, 4, 1));
    CHECK(min_nonconstant_degree(s) == 2);
    CHECK(!min_nonconstant_degree(Series::one(2, 4)).has_value());
    CHECK(!min_nonconstant_degree(Series(2, 4)).has_value());
}

TEST_CASE("rendering is graded") {
    Series s = Series::one(2, 3);
    s = add(s, series_mul(Series::variable(2, 3, 0), Series::variable(2, 3, 1)));
    s = sub(s, series_mul(Series::variable(2, 3, 1), Series::variable(2, 3, 0)));
    CHECK(render_series(s, var_name) == "1 + x_a.x_b - x_b.x_a");
    CHECK(render_series(Series(1, 2), var_name) == "0");
}

TEST_CASE("mixed caps are rejected") {
    CHECK_THROWS_AS(series_mul(Series::one(2, 3), Series::one(2, 4)), ComputeError);
    CHECK_THROWS_AS(add(Series::one(1, 3), Series::one(2, 3)), ComputeError);
}
