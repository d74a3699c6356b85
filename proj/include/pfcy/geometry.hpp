#ifndef PFCY_GEOMETRY_HPP
#define PFCY_GEOMETRY_HPP

#include <pfcy/multipoly.hpp>
#include <pfcy/polynomial.hpp>
#include <pfcy/rational.hpp>

#include <utility>
#include <vector>

namespace pfcy {

struct WeightedSpace {
    std::vector<int> weights; // 7 positive integers, dimension 6
    int total() const
    {
        int s = 0;
        for (int w : weights)
            s += w;
        return s;
    }
};

// Alternating complex of twisted free modules; position 0 carries sign +.
struct GradedResolution {
    // positions[p] = list of (twist, multiplicity)
    std::vector<std::vector<std::pair<int, int>>> positions;
};

class SkewPolyMatrix {
public:
    SkewPolyMatrix(int n, std::vector<MultiPoly> entries);
    // build from the strict upper triangle, row-major
    static SkewPolyMatrix from_upper(int n, const std::vector<MultiPoly> &upper);

    int size() const { return n_; }
    const MultiPoly &at(int i, int j) const { return entries_[i * n_ + j]; }
    // remove row/column i (0-based)
    SkewPolyMatrix minor_matrix(int i) const;

private:
    int n_;
    std::vector<MultiPoly> entries_;
};

// Pf(M); 0 for odd size. Recursion on the first row with memoization over
// index subsets.
MultiPoly pfaffian(const SkewPolyMatrix &M);

// P_i = (-1)^{i+1} Pf(M with row/column i removed), i = 1..n.
std::vector<MultiPoly> pfaffian_generators(const SkewPolyMatrix &M);

// Hilbert series as a rational function numerator/denominator in lowest
// terms, normalized with denominator(0) = 1. For the threefolds in this
// corpus the denominator reduces to (1-t)^4.
struct HilbertSeries {
    QPoly numerator;
    QPoly denominator;

    // true when the denominator is exactly (1-t)^4
    bool threefold_form() const;
    // integer numerator when in threefold form
    ZPoly threefold_numerator() const;
};

// Alternating sum of t^{-twist} / prod(1 - t^{w_i}), reduced.
HilbertSeries hilbert_series(const GradedResolution &res, const WeightedSpace &w);

// Numerator at t = 1 for a pole-order-4 series; equals 3! times the leading
// Hilbert coefficient. Throws unless the series is in threefold form.
Int degree_from_hilbert(const HilbertSeries &H);

// Monomials of weighted degree k in the 7 variables; 0 for k < 0.
Int weighted_h0(const WeightedSpace &w, long k);

// c2.H = 12 h^0(O(H)) - 2 deg, from chi(O(H)) = deg/6 + c2.H/12.
Int c2h(const Int &deg, const Int &h0_of_H);

// Structure-sheaf pfaffian complex O <- E(-s) <- E^v(-t-s) <- O(-t-2s),
// s = c1(E) + 2t, as a graded resolution with position 0 = O.
GradedResolution pfaffian_complex(const std::vector<int> &bundle_twists, int t);

// h^{1,2} = sum_{i=1..3} (-1)^{i+1} h^6(P_w, F_i) - sum_i h^0(O(w_i)),
// with h^6(O(k)) = h^0(O(-|w| - k)) by Serre duality. positions counted from
// the S_2 E end of the I^2 resolution.
Int hodge_h12(const GradedResolution &i2_resolution, const WeightedSpace &w);

} // namespace pfcy

#endif
