#ifndef PFCY_THETA_OPERATOR_HPP
#define PFCY_THETA_OPERATOR_HPP

#include <pfcy/number_field.hpp>
#include <pfcy/polynomial.hpp>
#include <pfcy/rational.hpp>
#include <pfcy/series.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pfcy {

// Differential operator sum_{i,j} c_ij phi^j Theta^i with Theta = phi d/dphi.
// Canonical form: integer coefficients, content 1, and the leading Theta row
// C_order(phi) has positive lowest nonzero coefficient.
class ThetaOperator {
public:
    ThetaOperator() = default;
    // rows[i][j] = coefficient of phi^j Theta^i; canonicalizes
    static ThetaOperator from_rational(const std::vector<QPoly> &rows);
    static ThetaOperator from_integer(const std::vector<std::vector<Int>> &rows);

    int order() const { return (int)c_.size() - 1; }
    int phi_degree() const
    {
        return c_.empty() ? -1 : (int)c_.front().size() - 1;
    }
    const Int &coeff(int i, int j) const { return c_[i][j]; }

    // C_i(phi), the phi-polynomial multiplying Theta^i
    QPoly phi_poly(int i) const;
    // P_j(theta) = sum_i c_ij theta^i, the theta-polynomial of the phi^j column
    QPoly column_poly(int j) const;

    Series apply(const Series &s) const;
    // zero iff annihilates s to the order justified by truncation
    bool annihilates(const Series &s) const { return apply(s).is_zero(); }

    // all indicial roots at 0 equal 0 (and C_order(0) != 0)
    bool is_mum_at_origin() const;

    bool operator==(const ThetaOperator &o) const { return c_ == o.c_; }

private:
    std::vector<std::vector<Int>> c_; // [i][j], canonical
    void canonicalize();
};

// Unique power-series solution with given a0, via the P_0(n) a_n = -sum ... recurrence.
// Throws on resonance (P_0(n) = 0 for some n >= 1).
Series recurrence_solve(const ThetaOperator &L, const Rat &a0, int order);

// Least-order annihilator of s with the given shape, by exact nullspace.
// nullopt if none; throws if the nullspace has dimension > 1.
std::optional<ThetaOperator> fit_operator(const Series &s, int order, int phi_degree);

// --- singular points and indicial exponents ---

struct SingularPoint {
    enum class Kind { finite_rational, finite_quadratic, infinity };
    Kind kind = Kind::finite_rational;
    Rat value;                  // finite_rational
    ZPoly min_poly;             // finite_quadratic: irreducible integer quadratic
    int conjugate_index = 0;    // 0 or 1, labels the two roots
    std::string to_string() const;
};

struct IndicialResult {
    std::vector<Rat> exponents; // sorted, with multiplicity
    ZPoly unresolved;           // nonempty if roots beyond Q remain
    bool complete() const { return unresolved.empty(); }
};

IndicialResult indicial_exponents(const ThetaOperator &L, const SingularPoint &at);

struct PScheme {
    struct Row {
        SingularPoint point;
        IndicialResult exponents;
    };
    std::vector<Row> points; // ordered: 0, finite singular points, infinity
};

// Locations are 0, the roots of C_order, and infinity.
PScheme pscheme(const ThetaOperator &L);

// Fuchs relation value sum over exponents for order-4 operators:
// (#points - 2) * 6.
Rat fuchs_expected(const PScheme &ps);
Rat fuchs_sum(const PScheme &ps);

// --- transforms ---

struct TransformStep {
    enum class Kind { invert, rescale, negate, gauge };
    Kind kind;
    Rat c; // rescale / gauge parameter
    static TransformStep invert() { return {Kind::invert, Rat(0)}; }
    static TransformStep rescale(const Rat &c) { return {Kind::rescale, c}; }
    static TransformStep negate() { return {Kind::negate, Rat(0)}; }
    static TransformStep gauge(const Rat &c) { return {Kind::gauge, c}; }
};

ThetaOperator transform(const ThetaOperator &L, const TransformStep &step);
ThetaOperator transform_chain(const ThetaOperator &L,
                              const std::vector<TransformStep> &steps);

Factorization leading_coefficient_factor(const ThetaOperator &L);

} // namespace pfcy

#endif
