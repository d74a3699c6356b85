#ifndef PFCY_RESIDUE_ORACLE_HPP
#define PFCY_RESIDUE_ORACLE_HPP

#include <pfcy/rational.hpp>

#include <array>
#include <vector>

namespace pfcy {

// The integrand 1/prod_rows(1 - sum_j a_{row,j}) expanded as a power series;
// each a_{row,j} is a Laurent monomial in x1..x6 with a positive t power and
// coefficient 1. Period coefficients come from the x-free terms.
struct LaurentMonomialSystem {
    struct Mono {
        std::array<int, 6> x; // exponents of x1..x6 (Laurent, may be negative)
        int t;                // positive t exponent
    };
    std::vector<std::vector<Mono>> rows;
};

// The (a_ij) data of the degree-13 family on the chart x0 = 1.
LaurentMonomialSystem x13_system();

struct SolutionBasis {
    int rank;
    // generators as full exponent assignments (one entry per monomial,
    // row-major), all non-negative
    std::vector<std::vector<int>> generators;
    std::vector<int> t_degrees;
};

// Lattice of x-free exponent combinations: rank and non-negative generators.
SolutionBasis solution_basis_check(const LaurentMonomialSystem &sys);

// Coefficient of t^t_power in the period integrand, by walking the null
// lattice. With naive = true, uses the direct bounded enumeration instead
// (intended for t_power <= 14 as an oracle-for-the-oracle).
Rat constant_term_coefficient(const LaurentMonomialSystem &sys, int t_power,
                              bool naive = false);

} // namespace pfcy

#endif
