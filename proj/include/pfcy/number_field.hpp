#ifndef PFCY_NUMBER_FIELD_HPP
#define PFCY_NUMBER_FIELD_HPP

#include <pfcy/rational.hpp>
#include <vector>

namespace pfcy {

// Q[x]/(m) for a monic m of degree 1 or 2. Degree 1 collapses to plain
// rational arithmetic (the element is -m0).
struct QuadField {
    // monic min_poly x^2 + c1 x + c0, or degree 1 when deg1 is set
    Rat c1, c0;
    bool deg1 = false;

    static QuadField rationals() { return QuadField{Rat(0), Rat(0), true}; }
    // from integer quadratic a x^2 + b x + c (a != 0), normalized monic
    static QuadField from_quadratic(const Rat &a, const Rat &b, const Rat &c)
    {
        if (a == 0)
            throw error("QuadField: leading coefficient is zero");
        return QuadField{b / a, c / a, false};
    }
    bool operator==(const QuadField &o) const
    {
        return deg1 == o.deg1 && c1 == o.c1 && c0 == o.c0;
    }
    // discriminant c1^2 - 4 c0; irreducible over Q iff not a rational square
    Rat discriminant() const { return c1 * c1 - 4 * c0; }
    bool is_irreducible() const;
};

// a + b*alpha with alpha a root of the field's min_poly.
struct NumberFieldElement {
    QuadField field;
    Rat a, b;

    static NumberFieldElement from_rational(const Rat &r,
                                            const QuadField &f = QuadField::rationals())
    {
        return {f, r, Rat(0)};
    }
    static NumberFieldElement generator(const QuadField &f)
    {
        if (f.deg1)
            throw error("degree-1 field has no generator");
        return {f, Rat(0), Rat(1)};
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend NumberFieldElement operator+(const NumberFieldElement &x,
                                        const NumberFieldElement &y);
    friend NumberFieldElement operator-(const NumberFieldElement &x,
                                        const NumberFieldElement &y);
    friend NumberFieldElement operator*(const NumberFieldElement &x,
                                        const NumberFieldElement &y);
    NumberFieldElement inverse() const;
    NumberFieldElement div(const NumberFieldElement &y) const;
    bool operator==(const NumberFieldElement &y) const
    {
        return field == y.field && a == y.a && b == y.b;
    }
};

} // namespace pfcy

#endif
