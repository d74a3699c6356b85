#ifndef PFCY_SERIES_HPP
#define PFCY_SERIES_HPP

#include <pfcy/rational.hpp>
#include <algorithm>
#include <vector>

namespace pfcy {

// Truncated power series over exact rationals. Coefficient n is the
// coefficient of phi^n; coefficients are valid for n <= order(). Every
// operation takes the minimum truncation order justified by its inputs.
// Immutable in spirit: all operations return new values.
class Series {
public:
    explicit Series(int order) : coeffs_(order + 1) {}
    Series(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static Series constant(const Rat &c, int order)
    {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static Series one(int order) { return constant(Rat(1), order); }
    static Series phi(int order)
    {
        Series s(order);
        if (order >= 1)
            s.coeffs_[1] = 1;
        return s;
    }

    int order() const { return (int)coeffs_.size() - 1; }
    const Rat &operator[](int n) const { return coeffs_[n]; }
    Rat &mut(int n) { return coeffs_[n]; }

    bool is_zero() const
    {
        for (const auto &c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    // never extends: the result order is min(new_order, order())
    Series truncated(int new_order) const
    {
        int n = std::min(new_order, order());
        std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + n + 1);
        return Series(std::move(c), n);
    }

    friend Series operator+(const Series &a, const Series &b);
    friend Series operator-(const Series &a, const Series &b);
    friend Series operator*(const Series &a, const Series &b);
    friend Series operator*(const Rat &c, const Series &a);
    friend bool operator==(const Series &a, const Series &b);

    // a / b; b must have nonzero constant term.
    Series div(const Series &b) const;

    // Euler operator: coefficient n multiplied by n.
    Series theta() const;
    // Inverse of theta on series with zero constant term.
    Series integrate_theta() const;
    // exp of a series with zero constant term.
    Series exp() const;
    // log of a series with constant term 1.
    Series log() const;
    // this(b(q)) by Horner; b must have zero constant term.
    Series compose(const Series &b) const;
    // b with this(b(q)) = q; needs zero constant term, nonzero linear term.
    Series reversion() const;

private:
    std::vector<Rat> coeffs_;
};

} // namespace pfcy

#endif
