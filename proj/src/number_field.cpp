#include <pfcy/number_field.hpp>

namespace pfcy {

bool QuadField::is_irreducible() const
{
    if (deg1)
        return true;
    Rat d = discriminant();
    if (d < 0)
        return true;
    // rational square test: num and den both perfect squares
    Int n = numerator(d), m = denominator(d);
    return !(mpz_perfect_square_p(n.get_mpz_t()) &&
             mpz_perfect_square_p(m.get_mpz_t()));
}

static void check_same(const NumberFieldElement &x, const NumberFieldElement &y)
{
    if (!(x.field == y.field))
        throw error("number field arithmetic on mismatched fields");
}

NumberFieldElement operator+(const NumberFieldElement &x, const NumberFieldElement &y)
{
    check_same(x, y);
    return {x.field, x.a + y.a, x.b + y.b};
}

NumberFieldElement operator-(const NumberFieldElement &x, const NumberFieldElement &y)
{
    check_same(x, y);
    return {x.field, x.a - y.a, x.b - y.b};
}

NumberFieldElement operator*(const NumberFieldElement &x, const NumberFieldElement &y)
{
    check_same(x, y);
    if (x.field.deg1)
        return {x.field, x.a * y.a, Rat(0)};
    // alpha^2 = -c1 alpha - c0
    Rat cross = x.b * y.b;
    return {x.field, x.a * y.a - cross * x.field.c0,
            x.a * y.b + x.b * y.a - cross * x.field.c1};
}

NumberFieldElement NumberFieldElement::inverse() const
{
    if (is_zero())
        throw error("number field division by zero");
    if (field.deg1 || b == 0)
        return {field, Rat(1) / a, Rat(0)};
    // (a + b alpha)(x + y alpha) = 1 with alpha^2 = -c1 alpha - c0:
    //   a x - c0 b y = 1
    //   b x + (a - c1 b) y = 0
    Rat det = a * (a - field.c1 * b) + field.c0 * b * b;
    if (det == 0)
        throw error("number field element is a zero divisor (reducible min_poly?)");
    return {field, (a - field.c1 * b) / det, -b / det};
}

NumberFieldElement NumberFieldElement::div(const NumberFieldElement &y) const
{
    check_same(*this, y);
    return *this * y.inverse();
}

} // namespace pfcy
