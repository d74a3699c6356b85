#ifndef PFCY_MULTIPOLY_HPP
#define PFCY_MULTIPOLY_HPP

#include <pfcy/rational.hpp>

#include <array>
#include <map>
#include <string>

namespace pfcy {

// Sparse polynomials in x0..x6 and t with integer coefficients; exponent
// vector index 7 is the t power.
constexpr int kNumVars = 8;
using ExpVec = std::array<int, kNumVars>;

class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const Int &c);
    static MultiPoly variable(int index, int power = 1);
    static MultiPoly monomial(const Int &c, const ExpVec &e);

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<ExpVec, Int> &terms() const { return terms_; }

    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    MultiPoly operator-() const;
    bool operator==(const MultiPoly &o) const { return terms_ == o.terms_; }

    std::string to_string() const; // deterministic, for tables and diffs

private:
    std::map<ExpVec, Int> terms_;
    void add_term(const ExpVec &e, const Int &c);
};

} // namespace pfcy

#endif
