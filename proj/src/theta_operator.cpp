#include <pfcy/theta_operator.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pfcy {

void ThetaOperator::canonicalize()
{
    // trim empty leading rows / trailing columns
    while (!c_.empty()) {
        bool allzero = true;
        for (const auto &v : c_.back())
            if (v != 0)
                allzero = false;
        if (allzero)
            c_.pop_back();
        else
            break;
    }
    if (c_.empty())
        throw error("zero operator has no canonical form");
    size_t maxj = 0;
    for (const auto &row : c_)
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                maxj = std::max(maxj, j);
    for (auto &row : c_)
        row.resize(maxj + 1);

    Int g(0);
    for (const auto &row : c_)
        for (const auto &v : row)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto &row : c_)
            for (auto &v : row)
                v /= g;
    // sign: lowest nonzero coefficient of the leading Theta row positive
    for (const auto &v : c_.back()) {
        if (v == 0)
            continue;
        if (v < 0)
            for (auto &row : c_)
                for (auto &w : row)
                    w = -w;
        break;
    }
}

ThetaOperator ThetaOperator::from_rational(const std::vector<QPoly> &rows)
{
    Int den(1);
    for (const auto &row : rows)
        for (const auto &v : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator(v).get_mpz_t());
    ThetaOperator L;
    L.c_.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        L.c_[i].resize(rows[i].size());
        for (size_t j = 0; j < rows[i].size(); ++j)
            L.c_[i][j] = numerator(rows[i][j] * Rat(den));
    }
    L.canonicalize();
    return L;
}

ThetaOperator ThetaOperator::from_integer(const std::vector<std::vector<Int>> &rows)
{
    ThetaOperator L;
    L.c_ = rows;
    L.canonicalize();
    return L;
}

QPoly ThetaOperator::phi_poly(int i) const
{
    QPoly p(c_[i].size());
    for (size_t j = 0; j < c_[i].size(); ++j)
        p[j] = Rat(c_[i][j]);
    return qp_trim(p);
}

QPoly ThetaOperator::column_poly(int j) const
{
    QPoly p(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        p[i] = Rat(c_[i][j]);
    return qp_trim(p);
}

Series ThetaOperator::apply(const Series &s) const
{
    int n = s.order();
    int deg = phi_degree();
    Series out(n);
    for (int i = 0; i <= order(); ++i) {
        for (int j = 0; j <= deg; ++j) {
            if (c_[i][j] == 0)
                continue;
            Rat cij(c_[i][j]);
            for (int m = j; m <= n; ++m) {
                if (s[m - j] == 0)
                    continue;
                out.mut(m) += cij * rat_pow(Rat(m - j), i) * s[m - j];
            }
        }
    }
    // multiplying by phi^j costs truncation: only orders <= n - deg are justified
    return out.truncated(std::max(0, n - deg));
}

bool ThetaOperator::is_mum_at_origin() const
{
    if (c_.back()[0] == 0)
        return false;
    for (int i = 0; i < order(); ++i)
        if (c_[i][0] != 0)
            return false;
    return true;
}

Series recurrence_solve(const ThetaOperator &L, const Rat &a0, int order)
{
    if (L.coeff(L.order(), 0) == 0)
        throw error("recurrence_solve: C_order(0) = 0, no power-series recurrence at 0");
    int deg = L.phi_degree();
    std::vector<QPoly> P(deg + 1);
    for (int j = 0; j <= deg; ++j)
        P[j] = L.column_poly(j);
    Series a(order);
    a.mut(0) = a0;
    for (int n = 1; n <= order; ++n) {
        Rat s(0);
        for (int j = 1; j <= std::min(n, deg); ++j)
            s += qp_eval(P[j], Rat(n - j)) * a[n - j];
        Rat p0 = qp_eval(P[0], Rat(n));
        if (p0 == 0)
            throw error("recurrence_solve: resonance, P_0(" + std::to_string(n) +
                        ") = 0");
        a.mut(n) = -s / p0;
    }
    return a;
}

std::optional<ThetaOperator> fit_operator(const Series &s, int order, int phi_degree)
{
    const int ncols = (order + 1) * (phi_degree + 1);
    const int margin = 10;
    if (s.order() < ncols + margin)
        throw error("fit_operator: series order " + std::to_string(s.order()) +
                    " too small for " + std::to_string(ncols) +
                    " unknowns (need margin " + std::to_string(margin) + ")");
    // unknowns c_ij in row-major (i, j); equation m: sum c_ij (m-j)^i s_{m-j} = 0
    const int nrows = s.order() + 1;
    std::vector<std::vector<Rat>> mat(nrows, std::vector<Rat>(ncols));
    for (int m = 0; m < nrows; ++m) {
        int k = 0;
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= phi_degree; ++j, ++k)
                if (m >= j && s[m - j] != 0)
                    mat[m][k] = rat_pow(Rat(m - j), i) * s[m - j];
    }
    // exact Gauss-Jordan
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int rr = r; rr < nrows; ++rr)
            if (mat[rr][c] != 0) {
                pr = rr;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(mat[r], mat[pr]);
        Rat pv = mat[r][c];
        for (int cc = c; cc < ncols; ++cc)
            mat[r][cc] /= pv;
        for (int rr = 0; rr < nrows; ++rr) {
            if (rr == r || mat[rr][c] == 0)
                continue;
            Rat f = mat[rr][c];
            for (int cc = c; cc < ncols; ++cc)
                mat[rr][cc] -= f * mat[r][cc];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < ncols; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_cols.push_back(c);
    if (free_cols.empty())
        return std::nullopt;
    if (free_cols.size() > 1)
        throw error("fit_operator: nullspace dimension " +
                    std::to_string(free_cols.size()) +
                    " (increase the series order)");
    int fc = free_cols[0];
    std::vector<Rat> sol(ncols);
    sol[fc] = 1;
    for (size_t rr = 0; rr < pivots.size(); ++rr)
        sol[pivots[rr]] = -mat[rr][fc];
    std::vector<QPoly> rows(order + 1, QPoly(phi_degree + 1));
    int k = 0;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= phi_degree; ++j, ++k)
            rows[i][j] = sol[k];
    return ThetaOperator::from_rational(rows);
}

// --- indicial machinery ---

std::string SingularPoint::to_string() const
{
    switch (kind) {
    case Kind::infinity:
        return "infinity";
    case Kind::finite_rational:
        return rat_to_string(value);
    case Kind::finite_quadratic: {
        std::ostringstream os;
        os << "root#" << conjugate_index << " of";
        for (int d = (int)min_poly.size() - 1; d >= 0; --d)
            os << " " << min_poly[d].get_str() << (d ? "*x^" + std::to_string(d) : "");
        return os.str();
    }
    }
    return "?";
}

namespace {

// polynomial in u with NumberFieldElement coefficients
using NFPoly = std::vector<NumberFieldElement>;

NFPoly nf_add(const NFPoly &a, const NFPoly &b)
{
    NFPoly out = a;
    if (b.size() > out.size())
        out.resize(b.size(), NumberFieldElement{b[0].field, Rat(0), Rat(0)});
    for (size_t i = 0; i < b.size(); ++i)
        out[i] = out[i] + b[i];
    return out;
}

NFPoly nf_mul(const NFPoly &a, const NFPoly &b, const QuadField &f)
{
    NFPoly out(a.size() + b.size() - 1, NumberFieldElement{f, Rat(0), Rat(0)});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

long stirling2(int n, int k)
{
    if (n == k)
        return 1;
    if (k == 0 || k > n)
        return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

// Indicial polynomial of L at finite point phi0 (an element of the given
// field), as a polynomial in rho with field coefficients:
//   L = sum_k A_k(u) (d/du)^k  with  A_k(u) = sum_i S(i,k) C_i(u+phi0)(u+phi0)^k,
//   ind(rho) = sum over k achieving the minimal valuation of
//              lead(A_k) rho(rho-1)...(rho-k+1).
NFPoly indicial_poly_finite(const ThetaOperator &L, const NumberFieldElement &phi0)
{
    const QuadField &f = phi0.field;
    auto nf = [&](const Rat &r) { return NumberFieldElement::from_rational(r, f); };
    NumberFieldElement zero = nf(Rat(0)), one = nf(Rat(1));
    NFPoly u_plus{phi0, one}; // u + phi0
    int ord = L.order();
    // powers of (u+phi0)
    std::vector<NFPoly> pw{NFPoly{one}};
    for (int k = 1; k <= 2 * ord; ++k)
        pw.push_back(nf_mul(pw.back(), u_plus, f));

    std::vector<NFPoly> A(ord + 1, NFPoly{zero});
    for (int k = 0; k <= ord; ++k) {
        for (int i = k; i <= ord; ++i) {
            long s2 = stirling2(i, k);
            if (s2 == 0)
                continue;
            QPoly Ci = L.phi_poly(i);
            NFPoly cval{zero};
            for (int j = (int)Ci.size() - 1; j >= 0; --j) {
                cval = nf_mul(cval, u_plus, f);
                cval[0] = cval[0] + nf(Ci.empty() ? Rat(0) : Ci[j]);
            }
            NFPoly term = nf_mul(cval, pw[k], f);
            NumberFieldElement s2e = nf(Rat(s2));
            for (auto &t : term)
                t = s2e * t;
            A[k] = nf_add(A[k], term);
        }
    }
    auto valuation = [&](const NFPoly &p) -> int {
        for (size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero())
                return (int)i;
        return 1 << 28;
    };
    int m = 1 << 28;
    for (int k = 0; k <= ord; ++k)
        m = std::min(m, valuation(A[k]) - k);
    NFPoly ind(ord + 1, zero);
    for (int k = 0; k <= ord; ++k) {
        int v = valuation(A[k]);
        if (v - k != m || v >= (1 << 27))
            continue;
        NumberFieldElement lead = A[k][v];
        // falling factorial rho (rho-1) ... (rho-k+1)
        NFPoly ff{one};
        for (int t = 0; t < k; ++t)
            ff = nf_mul(ff, NFPoly{nf(Rat(-t)), one}, f);
        for (size_t i = 0; i < ff.size(); ++i)
            ind[i] = ind[i] + ff[i] * lead;
    }
    return ind;
}

// Rational roots of a polynomial with coefficients a + b*alpha: a rational
// root must kill both component polynomials, so work on their gcd.
IndicialResult roots_over_rationals(const NFPoly &ind)
{
    QPoly p1(ind.size()), p2(ind.size());
    for (size_t i = 0; i < ind.size(); ++i) {
        p1[i] = ind[i].a;
        p2[i] = ind[i].b;
    }
    p1 = qp_trim(p1);
    p2 = qp_trim(p2);
    QPoly g = p2.empty() ? p1 : (p1.empty() ? p2 : qp_gcd(p1, p2));
    IndicialResult out;
    if (g.empty())
        throw error("indicial polynomial vanished identically");
    auto [roots, rest] = rational_roots(zp_from_qp(g));
    out.exponents = roots;
    if ((int)rest.size() - 1 >= 1)
        out.unresolved = rest;
    return out;
}

} // namespace

IndicialResult indicial_exponents(const ThetaOperator &L, const SingularPoint &at)
{
    switch (at.kind) {
    case SingularPoint::Kind::infinity: {
        ThetaOperator Linf = transform(L, TransformStep::invert());
        SingularPoint origin;
        origin.kind = SingularPoint::Kind::finite_rational;
        origin.value = 0;
        return indicial_exponents(Linf, origin);
    }
    case SingularPoint::Kind::finite_rational: {
        if (at.value == 0) {
            // indicial polynomial is P_0(rho)
            QPoly P0 = L.column_poly(0);
            NFPoly ind;
            for (const auto &c : P0)
                ind.push_back(NumberFieldElement::from_rational(c));
            return roots_over_rationals(ind);
        }
        if (qp_eval(L.phi_poly(L.order()), at.value) != 0)
            throw error("indicial_exponents: " + rat_to_string(at.value) +
                        " is not a singular point (C_order does not vanish)");
        NumberFieldElement phi0 =
            NumberFieldElement::from_rational(at.value);
        return roots_over_rationals(indicial_poly_finite(L, phi0));
    }
    case SingularPoint::Kind::finite_quadratic: {
        if (at.min_poly.size() != 3)
            throw error("quadratic singular point needs a degree-2 min_poly");
        QuadField f = QuadField::from_quadratic(Rat(at.min_poly[2]),
                                                Rat(at.min_poly[1]),
                                                Rat(at.min_poly[0]));
        if (!f.is_irreducible())
            throw error("min_poly of quadratic point is reducible over Q");
        NumberFieldElement alpha = NumberFieldElement::generator(f);
        // singularity check: C_order(alpha) must vanish in the field
        {
            QPoly C = L.phi_poly(L.order());
            NumberFieldElement v = NumberFieldElement::from_rational(Rat(0), f);
            for (int i = (int)C.size() - 1; i >= 0; --i)
                v = v * alpha + NumberFieldElement::from_rational(C[i], f);
            if (!v.is_zero())
                throw error("indicial_exponents: the quadratic point is not "
                            "a root of C_order");
        }
        return roots_over_rationals(indicial_poly_finite(L, alpha));
    }
    }
    throw error("unreachable");
}

PScheme pscheme(const ThetaOperator &L)
{
    PScheme ps;
    SingularPoint origin;
    origin.kind = SingularPoint::Kind::finite_rational;
    origin.value = 0;
    ps.points.push_back({origin, indicial_exponents(L, origin)});

    Factorization f = leading_coefficient_factor(L);
    if (!f.unfactored.empty())
        throw error("pscheme: C_order has an unfactorable component");
    // collect finite singular points: roots of each factor, skipping 0
    std::vector<PScheme::Row> finite;
    for (const auto &pf : f.factors) {
        if (pf.factor.size() == 2) {
            Rat r = Rat(-pf.factor[0]) / Rat(pf.factor[1]);
            r.canonicalize();
            if (r == 0)
                continue;
            SingularPoint sp;
            sp.kind = SingularPoint::Kind::finite_rational;
            sp.value = r;
            finite.push_back({sp, indicial_exponents(L, sp)});
        } else {
            for (int idx = 0; idx < 2; ++idx) {
                SingularPoint sp;
                sp.kind = SingularPoint::Kind::finite_quadratic;
                sp.min_poly = pf.factor;
                sp.conjugate_index = idx;
                finite.push_back({sp, indicial_exponents(L, sp)});
            }
        }
    }
    // stable order: quadratic pairs first (alpha_1, alpha_2), then rationals
    // ascending, the usual table ordering
    std::stable_sort(finite.begin(), finite.end(),
                     [](const PScheme::Row &a, const PScheme::Row &b) {
                         bool qa = a.point.kind == SingularPoint::Kind::finite_quadratic;
                         bool qb = b.point.kind == SingularPoint::Kind::finite_quadratic;
                         if (qa != qb)
                             return qa;
                         if (!qa)
                             return a.point.value < b.point.value;
                         return false;
                     });
    for (auto &row : finite)
        ps.points.push_back(std::move(row));

    SingularPoint inf;
    inf.kind = SingularPoint::Kind::infinity;
    ps.points.push_back({inf, indicial_exponents(L, inf)});
    return ps;
}

Rat fuchs_expected(const PScheme &ps)
{
    return Rat((long)(ps.points.size() - 2) * 6);
}

Rat fuchs_sum(const PScheme &ps)
{
    Rat s(0);
    for (const auto &row : ps.points)
        for (const auto &e : row.exponents.exponents)
            s += e;
    return s;
}

// --- transforms ---

namespace {

using RatRows = std::vector<QPoly>; // rows[i][j] over Q

RatRows to_rows(const ThetaOperator &L)
{
    RatRows rows(L.order() + 1);
    for (int i = 0; i <= L.order(); ++i) {
        rows[i].resize(L.phi_degree() + 1);
        for (int j = 0; j <= L.phi_degree(); ++j)
            rows[i][j] = Rat(L.coeff(i, j));
    }
    return rows;
}

} // namespace

ThetaOperator transform(const ThetaOperator &L, const TransformStep &step)
{
    RatRows rows = to_rows(L);
    int ord = (int)rows.size() - 1;
    int deg = (int)rows[0].size() - 1;
    switch (step.kind) {
    case TransformStep::Kind::invert: {
        // phi -> 1/phi, Theta -> -Theta; clear denominators with phi^deg
        RatRows out(ord + 1, QPoly(deg + 1));
        for (int i = 0; i <= ord; ++i)
            for (int j = 0; j <= deg; ++j)
                out[i][deg - j] = (i % 2 ? -rows[i][j] : rows[i][j]);
        return ThetaOperator::from_rational(out);
    }
    case TransformStep::Kind::rescale: {
        if (step.c == 0)
            throw error("rescale(0) is not invertible");
        RatRows out(ord + 1, QPoly(deg + 1));
        for (int i = 0; i <= ord; ++i) {
            Rat p(1);
            for (int j = 0; j <= deg; ++j) {
                out[i][j] = rows[i][j] * p;
                p *= step.c;
            }
        }
        return ThetaOperator::from_rational(out);
    }
    case TransformStep::Kind::negate:
        return transform(L, TransformStep::rescale(Rat(-1)));
    case TransformStep::Kind::gauge: {
        // Theta -> Theta + c (conjugation by phi^c)
        RatRows out(ord + 1, QPoly(deg + 1));
        for (int i = 0; i <= ord; ++i)
            for (int j = 0; j <= deg; ++j) {
                if (rows[i][j] == 0)
                    continue;
                // (Theta + c)^i
                for (int k = 0; k <= i; ++k)
                    out[k][j] += rows[i][j] * Rat(binomial(i, k)) *
                                 rat_pow(step.c, i - k);
            }
        return ThetaOperator::from_rational(out);
    }
    }
    throw error("unreachable");
}

ThetaOperator transform_chain(const ThetaOperator &L,
                              const std::vector<TransformStep> &steps)
{
    ThetaOperator out = L;
    for (const auto &s : steps)
        out = transform(out, s);
    return out;
}

Factorization leading_coefficient_factor(const ThetaOperator &L)
{
    return factor_rational_quadratic(L.phi_poly(L.order()));
}

} // namespace pfcy
