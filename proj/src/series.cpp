#include <pfcy/series.hpp>

#include <algorithm>

namespace pfcy {

static int min_order(const Series &a, const Series &b)
{
    return std::min(a.order(), b.order());
}

Series operator+(const Series &a, const Series &b)
{
    int n = min_order(a, b);
    Series out(n);
    for (int i = 0; i <= n; ++i)
        out.mut(i) = a[i] + b[i];
    return out;
}

Series operator-(const Series &a, const Series &b)
{
    int n = min_order(a, b);
    Series out(n);
    for (int i = 0; i <= n; ++i)
        out.mut(i) = a[i] - b[i];
    return out;
}

Series operator*(const Series &a, const Series &b)
{
    int n = min_order(a, b);
    Series out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0)
                continue;
            out.mut(i + j) += a[i] * b[j];
        }
    }
    return out;
}

Series operator*(const Rat &c, const Series &a)
{
    Series out(a.order());
    for (int i = 0; i <= a.order(); ++i)
        out.mut(i) = c * a[i];
    return out;
}

bool operator==(const Series &a, const Series &b)
{
    if (a.order() != b.order())
        return false;
    for (int i = 0; i <= a.order(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

Series Series::div(const Series &b) const
{
    if (b[0] == 0)
        throw error("series division by series with zero constant term");
    int n = min_order(*this, b);
    Series out(n);
    for (int i = 0; i <= n; ++i) {
        Rat s = (*this)[i];
        for (int j = 0; j < i; ++j)
            s -= out[j] * b[i - j];
        out.mut(i) = s / b[0];
    }
    return out;
}

Series Series::theta() const
{
    Series out(order());
    for (int i = 1; i <= order(); ++i)
        out.mut(i) = Rat(i) * coeffs_[i];
    return out;
}

Series Series::integrate_theta() const
{
    if (coeffs_[0] != 0)
        throw error("integrate_theta needs zero constant term");
    Series out(order());
    for (int i = 1; i <= order(); ++i)
        out.mut(i) = coeffs_[i] / i;
    return out;
}

Series Series::exp() const
{
    if (coeffs_[0] != 0)
        throw error("series exp needs zero constant term");
    int n = order();
    Series out = Series::one(n);
    Series term = Series::one(n);
    for (int k = 1; k <= n; ++k) {
        term = term * (*this);
        term = Rat(1, k) * term;
        out = out + term;
        if (term.is_zero())
            break;
    }
    return out;
}

Series Series::log() const
{
    if (coeffs_[0] != 1)
        throw error("series log needs constant term 1");
    int n = order();
    Series u = *this - Series::one(n);
    Series out(n);
    Series term = Series::one(n);
    int sign = 1;
    for (int k = 1; k <= n; ++k) {
        term = term * u;
        if (term.is_zero())
            break;
        out = out + (Rat(sign, k) * term);
        sign = -sign;
    }
    return out;
}

Series Series::compose(const Series &b) const
{
    if (b[0] != 0)
        throw error("series composition needs inner series with zero constant term");
    int n = min_order(*this, b);
    Series out(n);
    for (int i = std::min(order(), n); i >= 0; --i) {
        out = out * b;
        out.mut(0) += coeffs_[i];
    }
    return out;
}

Series Series::reversion() const
{
    if (coeffs_[0] != 0)
        throw error("series reversion needs zero constant term");
    if (order() < 1 || coeffs_[1] == 0)
        throw error("series reversion needs nonzero linear term");
    int n = order();
    Series b(n);
    b.mut(1) = Rat(1) / coeffs_[1];
    for (int k = 2; k <= n; ++k) {
        // coefficient k of compose(b) depends only on b_1..b_{k-1} beyond the
        // linear term, so solve degree by degree
        Series comp = compose(b);
        b.mut(k) = -comp[k] / coeffs_[1];
    }
    return b;
}

} // namespace pfcy
