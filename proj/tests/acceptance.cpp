// Acceptance suite: one criterion per case, exact comparisons, one PASS/FAIL
// line each. Run all or a single one with --criterion N.
#include <pfcy/enumerative.hpp>
#include <pfcy/family_registry.hpp>
#include <pfcy/frobenius.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/residue_oracle.hpp>
#include <pfcy/theta_operator.hpp>

#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pfcy;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            detail << "\n    mismatch: " << what;
        }
    }
};

const FamilySpec &fam(const std::string &n)
{
    return FamilyRegistry::instance().get(n);
}

std::vector<Rat> rats(std::initializer_list<const char *> v)
{
    std::vector<Rat> out;
    for (const char *s : v)
        out.push_back(rat_from_string(s));
    return out;
}

GVTable genus0_table(const FamilySpec &f, int order = 30)
{
    Rat deg = f.invariant("deg");
    Series K = yukawa_q(*f.op, deg, order);
    return gv_genus0(K, deg, 5);
}

// ---- criteria ----

void criterion1(Check &c)
{
    for (const char *nm : {"x13", "x5", "x10", "x9"}) {
        const FamilySpec &f = fam(nm);
        Series s = closed_form_period(f, 34);
        Series r = f.op->apply(s);
        c.expect(r.order() >= 30 && r.is_zero(),
                 std::string(nm) + ": operator does not annihilate the closed form");
    }
    const FamilySpec &x7 = fam("x7");
    Series rec = recurrence_solve(*x7.op, Rat(1), 30);
    Series printed = closed_form_period(x7, 30);
    c.expect(rec[1] == 48, "x7 recurrence a1 != 48");
    c.expect(printed[1] == 24, "x7 printed closed-form a1 != 24");
    c.expect(!x7.op->apply(printed).is_zero(),
             "x7 operator unexpectedly annihilates the printed series");
}

void criterion2(Check &c)
{
    const auto &reg = FamilyRegistry::instance();
    // (a) as stated: the chain output must equal the PRINTED D' and tilde-D.
    // The printed displays carry a sign misprint (rows phi^1..phi^4 flipped);
    // the published virtual BPS table pins the corrected operator, which the
    // chain does reproduce. Kept faithful to the criterion text, so this part
    // fails; see the x13_tilde registry notes.
    {
        const FamilySpec &x13 = fam("x13");
        ThetaOperator dprime =
            transform_chain(*x13.op, x13.transforms.at("to_dprime").steps);
        ThetaOperator printed_dprime =
            operator_from_json(x13.golden.at("printed_dprime"));
        c.expect(dprime == printed_dprime,
                 "(a) chain(D) != printed D' [documented sign misprint: the "
                 "printed rows phi^1..phi^4 have flipped signs]");
        ThetaOperator tilde =
            transform_chain(*x13.op, x13.transforms.at("to_infinity").steps);
        ThetaOperator printed_tilde =
            operator_from_json(x13.golden.at("printed_tilde"));
        c.expect(tilde == printed_tilde,
                 "(a) chain(D) != printed tilde-D [same documented misprint; "
                 "the chain output equals the registry x13_tilde operator, "
                 "which reproduces the published virtual BPS table]");
    }
    // (b) the analogous chain maps D5 to itself
    {
        const FamilySpec &x5 = fam("x5");
        ThetaOperator got =
            transform_chain(*x5.op, x5.transforms.at("to_infinity").steps);
        c.expect(got == *x5.op, "(b) infinity chain does not fix D5");
    }
    // (c) transforming D10 yields the printed tilde-D10
    {
        const FamilySpec &x10 = fam("x10");
        ThetaOperator got =
            transform_chain(*x10.op, x10.transforms.at("to_infinity").steps);
        c.expect(got == *reg.get("x10_tilde").op,
                 "(c) infinity chain on D10 misses the printed tilde-D10");
    }
}

void criterion3(Check &c)
{
    struct Want {
        const char *nm;
        ZPoly quad;
        Rat excl;
        std::vector<Rat> inf;
    };
    const std::vector<Rat> half4 = rats({"1/2", "1/2", "1/2", "1/2"});
    const Want wants[] = {
        {"x13", {Int(-1), Int(349), Int(256)}, Rat(13, 16), half4},
        {"x5", {Int(1), Int(-1968), Int(256)}, Rat(1, 16), half4},
        {"x7",
         {Int(-1), Int(1080), Int(432)},
         Rat(7, 36),
         rats({"1/3", "1/2", "1/2", "2/3"})},
        {"x10", {Int(1), Int(-544), Int(256)}, Rat(5, 16), half4},
    };
    for (const auto &w : wants) {
        PScheme ps = pscheme(*fam(w.nm).op);
        std::string nm = w.nm;
        c.expect(ps.points.size() == 5, nm + ": expected 5 singular points");
        if (ps.points.size() != 5)
            continue;
        auto expect_exps = [&](int i, const std::vector<Rat> &want,
                               const std::string &where) {
            c.expect(ps.points[i].exponents.complete(),
                     nm + " @" + where + ": unresolved exponents");
            c.expect(ps.points[i].exponents.exponents == want,
                     nm + " @" + where + ": wrong exponents");
        };
        c.expect(ps.points[0].point.kind == SingularPoint::Kind::finite_rational &&
                     ps.points[0].point.value == 0,
                 nm + ": first point is not 0");
        expect_exps(0, rats({"0", "0", "0", "0"}), "0");
        for (int i : {1, 2}) {
            c.expect(ps.points[i].point.kind ==
                             SingularPoint::Kind::finite_quadratic &&
                         ps.points[i].point.min_poly == w.quad,
                     nm + ": conifold quadratic differs at point " +
                         std::to_string(i));
            expect_exps(i, rats({"0", "1", "1", "2"}), "alpha");
        }
        c.expect(ps.points[3].point.kind == SingularPoint::Kind::finite_rational &&
                     ps.points[3].point.value == w.excl,
                 nm + ": wrong rational singular point");
        expect_exps(3, rats({"0", "1", "3", "4"}), "excluded point");
        c.expect(ps.points[4].point.kind == SingularPoint::Kind::infinity,
                 nm + ": last point is not infinity");
        expect_exps(4, w.inf, "infinity");
    }
}

void criterion4(Check &c)
{
    struct Want {
        const char *nm;
        ZPoly quad;
        Rat root;
    };
    const Want wants[] = {
        {"x13", {Int(-1), Int(349), Int(256)}, Rat(13, 16)},
        {"x5", {Int(1), Int(-1968), Int(256)}, Rat(1, 16)},
        {"x10", {Int(1), Int(-544), Int(256)}, Rat(5, 16)},
    };
    for (const auto &w : wants) {
        Factorization f = leading_coefficient_factor(*fam(w.nm).op);
        std::string nm = w.nm;
        c.expect(f.unfactored.empty(), nm + ": incomplete factorization");
        bool quad_ok = false, lin_ok = false;
        for (const auto &pf : f.factors) {
            if (pf.factor.size() == 3 && pf.factor == w.quad &&
                pf.multiplicity == 1)
                quad_ok = true;
            if (pf.factor.size() == 2 && pf.multiplicity == 2 &&
                Rat(-pf.factor[0]) / Rat(pf.factor[1]) == w.root)
                lin_ok = true;
        }
        c.expect(quad_ok, nm + ": conifold quadratic factor differs");
        c.expect(lin_ok, nm + ": repeated linear factor differs");
        c.expect(f.factors.size() == 2, nm + ": extra factors appeared");
    }
}

void criterion5(Check &c)
{
    Series q = mirror_map(*fam("x13").op, 12);
    c.expect(q[2] == 86 && q[3] == 12901 && q[4] == 2460318 &&
                 q[5] == Rat("536898026"),
             "x13 mirror map head differs from the printed expansion");
    for (const char *nm : {"x13", "x5", "x7", "x10"}) {
        Series m = mirror_map(*fam(nm).op, 10);
        bool integral = true;
        for (int i = 0; i <= 10; ++i)
            integral = integral && is_integer(m[i]);
        c.expect(m[1] == 1, std::string(nm) + ": linear coefficient not 1");
        c.expect(integral, std::string(nm) + ": mirror map not integral to order 10");
    }
}

void criterion6(Check &c)
{
    Series K = yukawa_q(*fam("x13").op, Rat(13), 12);
    auto want = rats({"13", "647", "129975", "25451198", "5134100919"});
    for (int i = 0; i < 5; ++i)
        c.expect(K[i] == want[i],
                 "x13 K_ttt coefficient " + std::to_string(i) + " differs");
}

void criterion7(Check &c)
{
    struct Want {
        const char *nm;
        std::vector<Rat> n0;
    };
    const Want wants[] = {
        {"x13", rats({"647", "16166", "942613", "80218296", "8418215008"})},
        {"x5",
         rats({"2220", "285520", "95254820", "47164553340", "28906372957040"})},
        {"x7",
         rats({"1434", "103026", "18676572", "4988009280", "1646787631350"})},
        {"x10", rats({"888", "33084", "3003816", "399931068", "65736977760"})},
    };
    for (const auto &w : wants) {
        GVTable t = genus0_table(fam(w.nm));
        for (int d = 1; d <= 5; ++d)
            c.expect(t.entries[d] == w.n0[d - 1],
                     std::string(w.nm) + " n0_" + std::to_string(d) + " differs");
    }
}

void criterion8(Check &c)
{
    struct Want {
        const char *nm;
        std::vector<Rat> n1;
    };
    const Want wants[] = {
        {"x13", rats({"0", "0", "176", "164696", "78309518"})},
        {"x5", rats({"0", "460", "873240", "1498922677", "2306959237408"})},
        {"x7", rats({"0", "26", "53076", "65171063", "63899034076"})},
        {"x10", rats({"0", "1", "2496", "2089393", "1210006912"})},
    };
    for (const auto &w : wants) {
        const FamilySpec &f = fam(w.nm);
        GVTable n0 = genus0_table(f);
        GVTable n1 = bcov_genus1(*f.op, f.enumerative_inputs(), f.disc, n0, 5, 30);
        for (int d = 1; d <= 5; ++d)
            c.expect(n1.entries[d] == w.n1[d - 1],
                     std::string(w.nm) + " n1_" + std::to_string(d) + " differs");
        // the disc choice is recorded per family in the registry
        c.expect(!f.disc.empty() && f.disc[0] == 1,
                 std::string(w.nm) + ": disc choice missing or unnormalized");
    }
}

void criterion9(Check &c)
{
    {
        GVTable t = virtual_invariants(*fam("x13_tilde").op, Rat(1), 5, 30);
        auto want = rats({"70944", "107300032", "3707752060576",
                          "66327758316665792", "1970671594871618215520"});
        for (int d = 1; d <= 5; ++d)
            c.expect(t.entries[d] == want[d - 1],
                     "x13 tilde virtual n0_" + std::to_string(d) + " differs");
    }
    {
        GVTable t = virtual_invariants(*fam("x10_tilde").op, Rat(1), 5, 30);
        auto want = rats({"2400", "1829880", "2956977632", "7117422755016",
                          "21319886408804640"});
        for (int d = 1; d <= 5; ++d)
            c.expect(t.entries[d] == want[d - 1],
                     "x10 tilde virtual n0_" + std::to_string(d) + " differs");
    }
}

void criterion10(Check &c)
{
    struct Want {
        const char *nm;
        ZPoly numerator;
        long deg, c2h_, h12;
    };
    const Want wants[] = {
        {"x5", {Int(1), Int(0), Int(3), Int(0), Int(1)}, 5, 38, 51},
        {"x7", {Int(1), Int(1), Int(3), Int(1), Int(1)}, 7, 46, 61},
        {"x10", {Int(1), Int(2), Int(4), Int(2), Int(1)}, 10, 52, 59},
    };
    for (const auto &w : wants) {
        const FamilySpec &f = fam(w.nm);
        WeightedSpace ws{f.weights};
        HilbertSeries H =
            hilbert_series(pfaffian_complex(f.bundle_twists, f.bundle_t), ws);
        std::string nm = w.nm;
        c.expect(H.threefold_form() && H.threefold_numerator() == w.numerator,
                 nm + ": Hilbert numerator differs");
        Int deg = degree_from_hilbert(H);
        c.expect(deg == w.deg, nm + ": degree differs");
        c.expect(c2h(deg, weighted_h0(ws, 1)) == w.c2h_, nm + ": c2.H differs");
        c.expect(hodge_h12(*f.i2_resolution, ws) == w.h12, nm + ": h12 differs");
    }
}

void criterion11(Check &c)
{
    const FamilySpec &f = fam("x13");
    auto gens = pfaffian_generators(*f.mirror_matrix);
    const auto &golden = f.golden.at("pfaffian_generators");
    c.expect(gens.size() == 5, "expected five generators");
    for (int i = 0; i < 5; ++i) {
        MultiPoly printed;
        for (const auto &t : golden.at(i)) {
            Int coef = int_from_string(t.at(0).get<std::string>());
            ExpVec e{};
            for (int k = 0; k < kNumVars; ++k)
                e[k] = t.at(1).at(k).get<int>();
            printed = printed + MultiPoly::monomial(coef, e);
        }
        bool plus = gens[i] == printed;
        bool minus = gens[i] == -printed;
        c.expect(plus || minus,
                 "P" + std::to_string(i + 1) + " differs beyond sign");
    }
}

void criterion12(Check &c)
{
    LaurentMonomialSystem sys = x13_system();
    for (int n = 0; n <= 4; ++n)
        c.expect(constant_term_coefficient(sys, 7 * n) ==
                     closed_form_coefficient("x13", n),
                 "oracle differs from the closed form at order " +
                     std::to_string(n));
    for (int t = 1; t <= 20; ++t)
        if (t % 7)
            c.expect(constant_term_coefficient(sys, t) == 0,
                     "oracle nonzero at t-power " + std::to_string(t));
}

void criterion13(Check &c)
{
    // deterministic xorshift, fixed seeds
    uint64_t state = 0x5eed5eed5eedull;
    auto rnd = [&](long lo, long hi) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return lo + (long)(state % (uint64_t)(hi - lo + 1));
    };
    auto rand_series = [&](int order) {
        Series s(order);
        for (int i = 0; i <= order; ++i)
            s.mut(i) = Rat(rnd(-5, 5));
        return s;
    };
    // series algebra laws
    for (int t = 0; t < 10; ++t) {
        Series a = rand_series(10), b = rand_series(10), d = rand_series(10);
        c.expect(((a * b) * d) == (a * (b * d)), "associativity failed");
        c.expect((a * (b + d)) == (a * b + a * d), "distributivity failed");
    }
    // reversion round trips
    for (int t = 0; t < 6; ++t) {
        Series s = rand_series(10);
        s.mut(0) = 0;
        if (s[1] == 0)
            s.mut(1) = 1;
        c.expect(s.compose(s.reversion()) == Series::phi(10),
                 "reversion round trip failed");
    }
    // fit/solve round trips on the registry operators
    for (const char *nm : {"x13", "x5", "x10", "x9"}) {
        const FamilySpec &f = fam(nm);
        Series s = closed_form_period(f, 36);
        auto L = fit_operator(s, 4, f.op->phi_degree());
        c.expect(L.has_value() && *L == *f.op &&
                     recurrence_solve(*L, Rat(1), 36) == s,
                 std::string(nm) + ": fit/solve round trip failed");
    }
    // Pf^2 = det on random skew integer matrices
    for (int n : {2, 4, 6}) {
        for (int t = 0; t < 4; ++t) {
            std::vector<MultiPoly> upper;
            std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    long v = rnd(-5, 5);
                    upper.push_back(MultiPoly::constant(Int(v)));
                    m[i][j] = v;
                    m[j][i] = -v;
                }
            MultiPoly pf = pfaffian(SkewPolyMatrix::from_upper(n, upper));
            Rat pfv = pf.is_zero() ? Rat(0) : Rat(pf.terms().begin()->second);
            // determinant via elimination
            Rat det(1);
            auto mm = m;
            bool zero = false;
            for (int col = 0; col < n && !zero; ++col) {
                int piv = col;
                while (piv < n && mm[piv][col] == 0)
                    ++piv;
                if (piv == n) {
                    zero = true;
                    break;
                }
                if (piv != col) {
                    std::swap(mm[piv], mm[col]);
                    det = -det;
                }
                det *= mm[col][col];
                for (int r = col + 1; r < n; ++r) {
                    if (mm[r][col] == 0)
                        continue;
                    Rat q = mm[r][col] / mm[col][col];
                    for (int cc = col; cc < n; ++cc)
                        mm[r][cc] -= q * mm[col][cc];
                }
            }
            if (zero)
                det = 0;
            c.expect(pfv * pfv == det, "Pf^2 != det");
        }
    }
    // GV inversion round trips
    for (int t = 0; t < 5; ++t) {
        GVTable n0;
        n0.genus = 0;
        for (int d = 1; d <= 6; ++d)
            n0.entries[d] = Rat(rnd(-9, 9));
        GVTable gw = gw_bps_convert(n0, ConvertDirection::bps_to_gw, 6);
        GVTable back = gw_bps_convert(gw, ConvertDirection::gw_to_bps, 6);
        c.expect(back.entries == n0.entries, "genus-0 GV round trip failed");
        GVTable n1;
        n1.genus = 1;
        for (int d = 1; d <= 6; ++d)
            n1.entries[d] = Rat(rnd(-9, 9));
        GVTable gw1 = gw_bps_convert(n1, ConvertDirection::bps_to_gw, 6, &n0);
        GVTable back1 = gw_bps_convert(gw1, ConvertDirection::gw_to_bps, 6, &n0);
        c.expect(back1.entries == n1.entries, "genus-1 GV round trip failed");
    }
    // genus-0 linearity in deg
    {
        const FamilySpec &f = fam("x13");
        Series K1 = yukawa_q(*f.op, Rat(13), 26);
        Series K2 = yukawa_q(*f.op, Rat(39), 26);
        GVTable a = gv_genus0(K1, Rat(13), 5);
        GVTable b = gv_genus0(K2, Rat(39), 5);
        for (int d = 1; d <= 5; ++d)
            c.expect(b.entries[d] == 3 * a.entries[d],
                     "genus-0 linearity failed at degree " + std::to_string(d));
    }
}

struct Criterion {
    int id;
    const char *label;
    std::function<void(Check &)> run;
};

const Criterion kCriteria[] = {
    {1, "operator verification (D, D5, D10, D9 annihilate; D7 documented mismatch)",
     criterion1},
    {2, "transform identities (D' and tilde-D as printed; D5 self-map; tilde-D10)",
     criterion2},
    {3, "P-schemes for X13, X5, X7, X10", criterion3},
    {4, "leading-coefficient factorizations", criterion4},
    {5, "mirror map values and integrality", criterion5},
    {6, "Yukawa coupling K_ttt for X13", criterion6},
    {7, "genus-0 BPS tables", criterion7},
    {8, "genus-1 BPS tables via BCOV", criterion8},
    {9, "virtual invariants at the second MUM points", criterion9},
    {10, "Hilbert series, degree, c2.H, h12", criterion10},
    {11, "pfaffian generators of the X13 mirror matrix", criterion11},
    {12, "residue oracle equivalence", criterion12},
    {13, "property suites (fixed seeds)", criterion13},
};

} // namespace

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }
    bool all_ok = true;
    for (const auto &cr : kCriteria) {
        if (only && cr.id != only)
            continue;
        Check c;
        try {
            cr.run(c);
        } catch (const std::exception &e) {
            c.ok = false;
            c.detail << "\n    exception: " << e.what();
        }
        std::cout << "criterion " << cr.id << ": " << (c.ok ? "PASS" : "FAIL")
                  << " - " << cr.label << c.detail.str() << "\n";
        if (!c.ok)
            all_ok = false;
    }
    return all_ok ? 0 : 1;
}
