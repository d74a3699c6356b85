#ifndef PFCY_POLYNOMIAL_HPP
#define PFCY_POLYNOMIAL_HPP

#include <pfcy/rational.hpp>
#include <utility>
#include <vector>

namespace pfcy {

// Dense univariate polynomials, coefficient index = power.
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

QPoly qp_trim(QPoly p);
int qp_degree(const QPoly &p); // -1 for zero
QPoly qp_add(const QPoly &a, const QPoly &b);
QPoly qp_sub(const QPoly &a, const QPoly &b);
QPoly qp_mul(const QPoly &a, const QPoly &b);
QPoly qp_scale(const QPoly &a, const Rat &c);
Rat qp_eval(const QPoly &p, const Rat &x);
// exact division; throws if remainder nonzero
QPoly qp_divexact(const QPoly &a, const QPoly &b);
QPoly qp_rem(QPoly a, const QPoly &b);
QPoly qp_gcd(QPoly a, QPoly b); // monic gcd

ZPoly zp_from_qp(const QPoly &p); // clears denominators, primitive, sign of leading kept
QPoly qp_from_zp(const ZPoly &p);
Int zp_content(const ZPoly &p);

// All rational roots with multiplicity; deflates the polynomial.
// Returns roots and the remaining (rootless) primitive integer factor.
std::pair<std::vector<Rat>, ZPoly> rational_roots(const ZPoly &p);

struct PolyFactor {
    ZPoly factor;
    int multiplicity;
};

struct Factorization {
    Rat content; // rational content removed, sign included
    std::vector<PolyFactor> factors;
    ZPoly unfactored; // empty when complete; flagged remainder otherwise
};

// Factors into content * linear^mult * irreducible quadratics, leaving
// anything of degree >= 3 without rational roots as an unfactored remainder.
Factorization factor_rational_quadratic(const QPoly &p);

} // namespace pfcy

#endif
