#include <doctest.h>

#include <pfcy/series.hpp>

#include "test_util.hpp"

using namespace pfcy;
using pfcy::test::Rng;
using pfcy::test::from_longs;
using pfcy::test::random_series;

TEST_CASE("series product: difference of squares")
{
    Series a = from_longs({1, 1}, 8);
    Series b = from_longs({1, -1}, 8);
    Series p = a * b;
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == -1);
    for (int i = 3; i <= 8; ++i)
        CHECK(p[i] == 0);
}

TEST_CASE("series division: geometric series")
{
    Series one = Series::one(10);
    Series d = from_longs({1, -1}, 10);
    Series g = one.div(d);
    for (int i = 0; i <= 10; ++i)
        CHECK(g[i] == 1);
    CHECK((g * d) == one);
}

TEST_CASE("squared x13 period has phi coefficient 40")
{
    // (1 + 20 phi + ...)^2, hand convolution from a1 = 20
    Series phi0 = from_longs({1, 20, 2196}, 2);
    Series sq = phi0 * phi0;
    CHECK(sq[1] == 40);
}

TEST_CASE("division by zero constant term is an error")
{
    Series a = Series::one(5);
    Series b = Series::phi(5);
    CHECK_THROWS_AS(a.div(b), error);
}

TEST_CASE("exp/log preconditions")
{
    CHECK_THROWS_AS(Series::one(5).exp(), error);
    CHECK_THROWS_AS(Series::phi(5).log(), error);
    CHECK_THROWS_AS(Series::one(5).integrate_theta(), error);
}

TEST_CASE("exp(log(1+phi)) round trip")
{
    Series s = from_longs({1, 1}, 12);
    CHECK(s.log().exp() == s);
}

TEST_CASE("theta and integrate_theta")
{
    Series g = Series::one(9).div(from_longs({1, -1}, 9)); // sum phi^n
    Series t = g.theta();
    for (int i = 0; i <= 9; ++i)
        CHECK(t[i] == i);
    Series s = from_longs({0, 1, 4}, 6);
    Series it = s.integrate_theta();
    CHECK(it[1] == 1);
    CHECK(it[2] == 2);
    CHECK(it.theta() == s);
}

TEST_CASE("reversion examples")
{
    CHECK(Series::phi(6).reversion() == Series::phi(6));
    Series a = from_longs({0, 1, 1}, 6);
    Series r = a.reversion();
    CHECK(r[1] == 1);
    CHECK(r[2] == -1);
    CHECK(r[3] == 2);
    CHECK(r[4] == -5);
    CHECK(a.compose(r) == Series::phi(6));
    CHECK_THROWS_AS(from_longs({0, 0, 1}, 6).reversion(), error);
}

TEST_CASE("truncation takes the minimum order")
{
    Series a = Series::one(10);
    Series b = Series::one(4);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
}

TEST_CASE("ring laws on random small series")
{
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_series(rng, 10);
        Series b = random_series(rng, 10);
        Series c = random_series(rng, 10);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b) == (b * a));
    }
}

TEST_CASE("exp/log inverse pair on random series")
{
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Series s = random_series(rng, 12);
        s.mut(0) = 0;
        CHECK(s.exp().log() == s);
        Series u = s;
        Series e = u.exp(); // constant term 1
        CHECK(e.log().exp() == e);
    }
}

TEST_CASE("reversion round trip on random admissible series")
{
    Rng rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        Series s = random_series(rng, 10);
        s.mut(0) = 0;
        if (s[1] == 0)
            s.mut(1) = 1;
        Series r = s.reversion();
        CHECK(s.compose(r) == Series::phi(10));
        CHECK(r.compose(s) == Series::phi(10));
    }
}

TEST_CASE("theta inverts integrate_theta on random series")
{
    Rng rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        Series s = random_series(rng, 10);
        s.mut(0) = 0;
        CHECK(s.integrate_theta().theta() == s);
    }
}
