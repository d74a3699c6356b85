#include <pfcy/geometry.hpp>

#include <map>

namespace pfcy {

SkewPolyMatrix::SkewPolyMatrix(int n, std::vector<MultiPoly> entries)
    : n_(n), entries_(std::move(entries))
{
    if ((int)entries_.size() != n_ * n_)
        throw error("SkewPolyMatrix: wrong entry count");
    for (int i = 0; i < n_; ++i) {
        if (!at(i, i).is_zero())
            throw error("SkewPolyMatrix: nonzero diagonal");
        for (int j = i + 1; j < n_; ++j)
            if (!(at(i, j) + at(j, i)).is_zero())
                throw error("SkewPolyMatrix: input is not skew-symmetric");
    }
}

SkewPolyMatrix SkewPolyMatrix::from_upper(int n, const std::vector<MultiPoly> &upper)
{
    if ((int)upper.size() != n * (n - 1) / 2)
        throw error("SkewPolyMatrix::from_upper: wrong entry count");
    std::vector<MultiPoly> e(n * n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            e[i * n + j] = upper[k];
            e[j * n + i] = -upper[k];
        }
    return SkewPolyMatrix(n, std::move(e));
}

SkewPolyMatrix SkewPolyMatrix::minor_matrix(int drop) const
{
    std::vector<MultiPoly> e;
    e.reserve((n_ - 1) * (n_ - 1));
    for (int i = 0; i < n_; ++i) {
        if (i == drop)
            continue;
        for (int j = 0; j < n_; ++j) {
            if (j == drop)
                continue;
            e.push_back(at(i, j));
        }
    }
    return SkewPolyMatrix(n_ - 1, std::move(e));
}

namespace {

MultiPoly pf_subset(const SkewPolyMatrix &M, unsigned mask,
                    std::map<unsigned, MultiPoly> &memo)
{
    if (mask == 0)
        return MultiPoly::constant(1);
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    // first index in the subset
    int first = -1;
    std::vector<int> idx;
    for (int i = 0; i < M.size(); ++i)
        if (mask & (1u << i)) {
            if (first < 0)
                first = i;
            else
                idx.push_back(i);
        }
    MultiPoly out;
    int sign = 1;
    for (int j : idx) {
        unsigned rest = mask & ~(1u << first) & ~(1u << j);
        MultiPoly term = M.at(first, j) * pf_subset(M, rest, memo);
        out = sign > 0 ? out + term : out - term;
        sign = -sign;
    }
    memo.emplace(mask, out);
    return out;
}

} // namespace

MultiPoly pfaffian(const SkewPolyMatrix &M)
{
    if (M.size() % 2 == 1)
        return MultiPoly(); // Pf = 0 for odd size
    std::map<unsigned, MultiPoly> memo;
    unsigned full = (1u << M.size()) - 1;
    return pf_subset(M, full, memo);
}

std::vector<MultiPoly> pfaffian_generators(const SkewPolyMatrix &M)
{
    std::vector<MultiPoly> out;
    for (int i = 0; i < M.size(); ++i) {
        MultiPoly p = pfaffian(M.minor_matrix(i));
        out.push_back(i % 2 == 0 ? p : -p); // (-1)^{i+1} with 1-based i
    }
    return out;
}

static QPoly one_minus_t_pow4()
{
    QPoly p{Rat(1)};
    for (int k = 0; k < 4; ++k)
        p = qp_mul(p, QPoly{Rat(1), Rat(-1)});
    return p;
}

bool HilbertSeries::threefold_form() const
{
    return denominator == one_minus_t_pow4();
}

ZPoly HilbertSeries::threefold_numerator() const
{
    if (!threefold_form())
        throw error("Hilbert series denominator is not (1-t)^4");
    ZPoly out(numerator.size());
    for (size_t i = 0; i < numerator.size(); ++i) {
        if (!is_integer(numerator[i]))
            throw error("Hilbert numerator is not integral");
        out[i] = pfcy::numerator(numerator[i]);
    }
    return out;
}

HilbertSeries hilbert_series(const GradedResolution &res, const WeightedSpace &w)
{
    // numerator over prod(1 - t^{w_i}): sum of signs * t^{-twist}
    std::map<int, Int> num;
    int sign = 1;
    for (const auto &pos : res.positions) {
        for (const auto &[twist, mult] : pos) {
            if (mult <= 0)
                throw error("hilbert_series: multiplicities must be positive");
            if (-twist < 0)
                throw error("hilbert_series: positive twist in resolution");
            num[-twist] += sign * mult;
        }
        sign = -sign;
    }
    int maxdeg = num.empty() ? 0 : num.rbegin()->first;
    QPoly N(maxdeg + 1);
    for (const auto &[e, c] : num)
        N[e] = Rat(c);
    N = qp_trim(N);
    QPoly den{Rat(1)};
    for (int wi : w.weights) {
        QPoly f(wi + 1);
        f[0] = 1;
        f[wi] = -1;
        den = qp_mul(den, f);
    }
    QPoly g = qp_gcd(N, den);
    if (qp_degree(g) >= 1) {
        N = qp_divexact(N, g);
        den = qp_divexact(den, g);
    }
    if (den.empty() || den[0] == 0)
        throw error("hilbert_series: reduced denominator vanishes at 0");
    Rat c = den[0];
    return {qp_scale(N, Rat(1) / c), qp_scale(den, Rat(1) / c)};
}

Int degree_from_hilbert(const HilbertSeries &H)
{
    ZPoly n = H.threefold_numerator();
    Int d(0);
    for (const auto &c : n)
        d += c;
    if (d == 0)
        throw error("degree_from_hilbert: numerator vanishes at t = 1 (wrong pole order)");
    return d;
}

Int weighted_h0(const WeightedSpace &w, long k)
{
    if (k < 0)
        return 0;
    std::vector<Int> dp(k + 1);
    dp[0] = 1;
    for (int wi : w.weights)
        for (long v = wi; v <= k; ++v)
            dp[v] += dp[v - wi];
    return dp[k];
}

Int c2h(const Int &deg, const Int &h0_of_H)
{
    return 12 * h0_of_H - 2 * deg;
}

GradedResolution pfaffian_complex(const std::vector<int> &bundle_twists, int t)
{
    if (bundle_twists.size() % 2 == 0)
        throw error("pfaffian_complex: bundle rank must be odd");
    int c1 = 0;
    for (int e : bundle_twists)
        c1 += e;
    int r = ((int)bundle_twists.size() - 1) / 2;
    int s = c1 + r * t;
    GradedResolution res;
    res.positions.resize(4);
    res.positions[0] = {{0, 1}};
    for (int e : bundle_twists)
        res.positions[1].push_back({e - s, 1});
    for (int e : bundle_twists)
        res.positions[2].push_back({-e - t - s, 1});
    res.positions[3] = {{-t - 2 * s, 1}};
    return res;
}

Int hodge_h12(const GradedResolution &i2_resolution, const WeightedSpace &w)
{
    if (i2_resolution.positions.size() != 3)
        throw error("hodge_h12: I^2 resolution needs exactly 3 positions");
    long W = w.total();
    Int alt(0);
    int sign = 1;
    for (const auto &pos : i2_resolution.positions) {
        for (const auto &[twist, mult] : pos)
            alt += sign * mult * weighted_h0(w, -W - twist);
        sign = -sign;
    }
    Int h3(0);
    for (int wi : w.weights)
        h3 += weighted_h0(w, wi);
    return alt - h3;
}

} // namespace pfcy
