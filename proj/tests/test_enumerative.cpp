#include <doctest.h>

#include <pfcy/enumerative.hpp>
#include <pfcy/family_registry.hpp>

#include "test_util.hpp"

using namespace pfcy;

static const FamilySpec &fam(const std::string &name)
{
    return FamilyRegistry::instance().get(name);
}

// the quintic operator theta^4 - 5 phi (5 theta+1)...(5 theta+4), the
// classic cross-check for every convention in this module
static ThetaOperator quintic()
{
    QPoly p{Rat(1)};
    for (long k = 1; k <= 4; ++k)
        p = qp_mul(p, QPoly{Rat(k), Rat(5)});
    std::vector<QPoly> rows(5);
    for (int i = 0; i <= 4; ++i)
        rows[i] = QPoly{Rat(0), i < (int)p.size() ? -5 * p[i] : Rat(0)};
    rows[4][0] = 1;
    return ThetaOperator::from_rational(rows);
}

TEST_CASE("yukawa_phi: quintic closed form and theta^4")
{
    Series E = yukawa_phi(quintic(), 12);
    Series geom = Series::one(12).div(pfcy::test::from_longs({1, -3125}, 12));
    CHECK(E == geom);
    ThetaOperator t4 = ThetaOperator::from_integer({{0}, {0}, {0}, {0}, {1}});
    CHECK(yukawa_phi(t4, 8) == Series::one(8));
}

TEST_CASE("yukawa_phi rejects irregular integrands")
{
    // C3(0) != 0: theta^4 + theta^3 - phi
    ThetaOperator L = ThetaOperator::from_integer({{0, -1}, {0}, {0}, {1}, {1}});
    CHECK_THROWS_AS(yukawa_phi(L, 6), error);
}

TEST_CASE("x13 Yukawa coupling matches the printed q-expansion")
{
    Series K = yukawa_q(*fam("x13").op, Rat(13), 12);
    CHECK(K[0] == 13);
    CHECK(K[1] == 647);
    CHECK(K[2] == 129975);
    CHECK(K[3] == 25451198);
    CHECK(K[4] == 5134100919);
}

TEST_CASE("yukawa is linear in deg")
{
    Series K13 = yukawa_q(*fam("x13").op, Rat(13), 10);
    Series K1 = yukawa_q(*fam("x13").op, Rat(1), 10);
    CHECK(K13 == Rat(13) * K1);
    for (const char *nm : {"x5", "x7", "x10"}) {
        Rat d = fam(nm).invariant("deg");
        CHECK(yukawa_q(*fam(nm).op, d, 8)[0] == d);
    }
}

TEST_CASE("genus-0 extraction for x13")
{
    Series K = yukawa_q(*fam("x13").op, Rat(13), 30);
    GVTable t = gv_genus0(K, Rat(13), 5);
    CHECK(t.entries[1] == 647);
    CHECK(t.entries[2] == 16166);
    CHECK(t.entries[3] == 942613);
    CHECK(t.entries[4] == 80218296);
    CHECK(t.entries[5] == Rat("8418215008"));
    // hand inversion of the d=2 multicover sum
    CHECK(t.entries[2] == (Rat(129975) - 647) / 8);
}

TEST_CASE("no corrections means no invariants")
{
    Series K = Series::constant(Rat(9), 20);
    GVTable t = gv_genus0(K, Rat(9), 5);
    for (int d = 1; d <= 5; ++d)
        CHECK(t.entries[d] == 0);
}

TEST_CASE("genus-0 pipeline is linear in deg")
{
    Series K1 = yukawa_q(*fam("x10").op, Rat(10), 30);
    Series K3 = yukawa_q(*fam("x10").op, Rat(30), 30);
    GVTable a = gv_genus0(K1, Rat(10), 5);
    GVTable b = gv_genus0(K3, Rat(30), 5);
    for (int d = 1; d <= 5; ++d)
        CHECK(b.entries[d] == 3 * a.entries[d]);
}

TEST_CASE("BCOV genus 1 for x13 and x10")
{
    for (const char *nm : {"x13", "x10"}) {
        const FamilySpec &f = fam(nm);
        Rat deg = f.invariant("deg");
        Series K = yukawa_q(*f.op, deg, 30);
        GVTable n0 = gv_genus0(K, deg, 5);
        GVTable n1 = bcov_genus1(*f.op, f.enumerative_inputs(), f.disc, n0, 5, 30);
        CAPTURE(nm);
        for (int d = 1; d <= 5; ++d) {
            Rat want = rat_from_string(
                f.golden.at("gv1").at(std::to_string(d)).get<std::string>());
            CHECK(n1.entries[d] == want);
        }
    }
}

TEST_CASE("BCOV trivial case: zero corrections stay zero")
{
    // theta^4 with chi = 48, h11 = 1 so the Phi0 exponent vanishes, disc = 1
    ThetaOperator t4 = ThetaOperator::from_integer({{0}, {0}, {0}, {0}, {1}});
    Series K = yukawa_q(t4, Rat(6), 20);
    GVTable n0 = gv_genus0(K, Rat(6), 5);
    EnumerativeInputs in{6, 24, 48, 1};
    GVTable n1 = bcov_genus1(t4, in, QPoly{Rat(1)}, n0, 5, 20);
    for (int d = 1; d <= 5; ++d) {
        CHECK(n0.entries[d] == 0);
        CHECK(n1.entries[d] == 0);
    }
}

TEST_CASE("BCOV rejects unnormalized discriminants")
{
    const FamilySpec &f = fam("x13");
    Series K = yukawa_q(*f.op, Rat(13), 20);
    GVTable n0 = gv_genus0(K, Rat(13), 3);
    QPoly bad{Rat(0), Rat(1)};
    CHECK_THROWS_AS(bcov_genus1(*f.op, f.enumerative_inputs(), bad, n0, 3, 20), error);
}

TEST_CASE("quintic cross-check: classical genus 0 and 1 values")
{
    ThetaOperator Q = quintic();
    Series K = yukawa_q(Q, Rat(5), 30);
    GVTable n0 = gv_genus0(K, Rat(5), 5);
    CHECK(n0.entries[1] == 2875);
    CHECK(n0.entries[2] == 609250);
    CHECK(n0.entries[3] == 317206375);
    EnumerativeInputs in{5, 50, -200, 1};
    GVTable n1 = bcov_genus1(Q, in, QPoly{Rat(1), Rat(-3125)}, n0, 5, 30);
    CHECK(n1.entries[1] == 0);
    CHECK(n1.entries[2] == 0);
    CHECK(n1.entries[3] == 609250);
    CHECK(n1.entries[4] == Rat("3721431625"));
    CHECK(n1.entries[5] == Rat("12129909700200"));
    // the genus-1 GW invariant at degree 3 (Zinger's value)
    GVTable gw = gw_bps_convert(n1, ConvertDirection::bps_to_gw, 3, &n0);
    CHECK(gw.entries[3] == Rat("243388750") / 9);
}

TEST_CASE("gw/bps conversion round trips")
{
    pfcy::test::Rng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        GVTable n0;
        n0.genus = 0;
        GVTable n1;
        n1.genus = 1;
        for (int d = 1; d <= 6; ++d) {
            n0.entries[d] = Rat(rng.small(-9, 9));
            n1.entries[d] = Rat(rng.small(-9, 9));
        }
        GVTable gw0 = gw_bps_convert(n0, ConvertDirection::bps_to_gw, 6);
        GVTable back0 = gw_bps_convert(gw0, ConvertDirection::gw_to_bps, 6);
        CHECK(back0.entries == n0.entries);
        GVTable gw1 = gw_bps_convert(n1, ConvertDirection::bps_to_gw, 6, &n0);
        GVTable back1 = gw_bps_convert(gw1, ConvertDirection::gw_to_bps, 6, &n0);
        CHECK(back1.entries == n1.entries);
    }
    // N_d = n_d when all proper divisors vanish
    GVTable sparse;
    sparse.genus = 0;
    sparse.entries = {{1, Rat(0)}, {2, Rat(0)}, {3, Rat(7)}, {4, Rat(0)}, {5, Rat(4)}};
    GVTable gw = gw_bps_convert(sparse, ConvertDirection::bps_to_gw, 5);
    CHECK(gw.entries[3] == 7);
    CHECK(gw.entries[5] == 4);
    // the k=2 multicover term: n1 = 647 alone contributes 647/8 at degree 2
    GVTable only1;
    only1.genus = 0;
    only1.entries = {{1, Rat(647)}, {2, Rat(0)}};
    CHECK(gw_bps_convert(only1, ConvertDirection::bps_to_gw, 2).entries[2] ==
          Rat(647, 8));
    // genus-1 conversion requires the genus-0 table
    GVTable g1;
    g1.genus = 1;
    g1.entries = {{1, Rat(1)}};
    CHECK_THROWS_AS(gw_bps_convert(g1, ConvertDirection::bps_to_gw, 1), error);
}

TEST_CASE("extraction inverts coupling assembly on arbitrary tables")
{
    pfcy::test::Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<int, Rat> n;
        for (int d = 1; d <= 5; ++d)
            n[d] = Rat(rng.small(-20, 20));
        // K = deg + sum_d n_d d^3 q^d/(1-q^d)
        int order = 24;
        Series K = Series::constant(Rat(11), order);
        for (int d = 1; d <= 5; ++d)
            for (int k = d; k <= order; k += d)
                K.mut(k) += n[d] * rat_pow(Rat(d), 3);
        GVTable t = gv_genus0(K, Rat(11), 5);
        for (int d = 1; d <= 5; ++d)
            CHECK(t.entries[d] == n[d]);
    }
}

TEST_CASE("virtual invariants of the tilde operators")
{
    SUBCASE("x13 tilde")
    {
        GVTable t = virtual_invariants(*fam("x13_tilde").op, Rat(1), 5, 30);
        CHECK(t.entries[1] == 70944);
        CHECK(t.entries[2] == 107300032);
        CHECK(t.entries[3] == Rat("3707752060576"));
        CHECK(t.entries[4] == Rat("66327758316665792"));
        CHECK(t.entries[5] == Rat("1970671594871618215520"));
    }
    SUBCASE("x10 tilde")
    {
        GVTable t = virtual_invariants(*fam("x10_tilde").op, Rat(1), 5, 30);
        CHECK(t.entries[1] == 2400);
        CHECK(t.entries[2] == 1829880);
        CHECK(t.entries[3] == Rat("2956977632"));
        CHECK(t.entries[4] == Rat("7117422755016"));
        CHECK(t.entries[5] == Rat("21319886408804640"));
    }
    SUBCASE("virtual_deg 2 doubles every entry")
    {
        GVTable a = virtual_invariants(*fam("x10_tilde").op, Rat(1), 4, 26);
        GVTable b = virtual_invariants(*fam("x10_tilde").op, Rat(2), 4, 26);
        for (int d = 1; d <= 4; ++d)
            CHECK(b.entries[d] == 2 * a.entries[d]);
    }
}

TEST_CASE("x10 tilde genus-1 column with the recorded virtual inputs")
{
    // virtual degree 2, c2H 20, chi -44 reproduce the published tilde-n^1
    // table; solved from degrees 1-2, degrees 3-5 are independent checks
    const FamilySpec &f = fam("x10_tilde");
    QPoly disc = f.disc;
    REQUIRE(!disc.empty());
    GVTable n1 = virtual_invariants_genus1(*f.op, Rat(2), Rat(20), Rat(-44),
                                           disc, 5, 30);
    CHECK(n1.entries[1] == 40);
    CHECK(n1.entries[2] == 138040);
    CHECK(n1.entries[3] == Rat("687719624"));
    CHECK(n1.entries[4] == Rat("3822563543952"));
    CHECK(n1.entries[5] == Rat("21893828822263288"));
}

TEST_CASE("geometric families have non-negative integer BPS invariants")
{
    for (const char *nm : {"x13", "x5", "x7", "x10"}) {
        const FamilySpec &f = fam(nm);
        Rat deg = f.invariant("deg");
        Series K = yukawa_q(*f.op, deg, 30);
        GVTable n0 = gv_genus0(K, deg, 5);
        GVTable n1 = bcov_genus1(*f.op, f.enumerative_inputs(), f.disc, n0, 5, 30);
        CAPTURE(nm);
        CHECK(n0.all_integral());
        CHECK(n1.all_integral());
        for (int d = 1; d <= 5; ++d) {
            CHECK(n0.entries[d] >= 0);
            CHECK(n1.entries[d] >= 0);
        }
    }
}
