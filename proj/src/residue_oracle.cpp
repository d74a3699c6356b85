#include <pfcy/residue_oracle.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace pfcy {

LaurentMonomialSystem x13_system()
{
    // rows over x0 = 1; exponent order x1..x6
    using M = LaurentMonomialSystem::Mono;
    LaurentMonomialSystem s;
    s.rows = {
        {M{{0, 0, -1, -1, 2, 1}, 1}, M{{0, 0, -1, -1, 1, 2}, 1},
         M{{1, 2, -1, -1, 0, 0}, 2}},
        {M{{-1, 0, 0, 0, -1, -1}, 1}, M{{-1, 2, 1, 0, -1, -1}, 2},
         M{{-1, 2, 0, 1, -1, -1}, 2}},
        {M{{0, -1, 2, 1, -1, -1}, 1}, M{{0, -1, 1, 2, -1, -1}, 1},
         M{{1, -1, 0, 0, -1, -1}, 2}},
    };
    return s;
}

namespace {

std::vector<LaurentMonomialSystem::Mono> flatten(const LaurentMonomialSystem &sys)
{
    std::vector<LaurentMonomialSystem::Mono> flat;
    for (const auto &row : sys.rows)
        for (const auto &m : row)
            flat.push_back(m);
    return flat;
}

// multinomial weight: product over rows of (sum n)! / prod n!
Rat weight_of(const LaurentMonomialSystem &sys, const std::vector<int> &n)
{
    Int w(1);
    size_t k = 0;
    for (const auto &row : sys.rows) {
        std::vector<unsigned long> parts;
        for (size_t j = 0; j < row.size(); ++j)
            parts.push_back((unsigned long)n[k++]);
        w *= multinomial(parts);
    }
    return Rat(w);
}

// rational kernel of the 6 x m exponent matrix, as primitive integer vectors
std::vector<std::vector<Int>> x_kernel(const std::vector<LaurentMonomialSystem::Mono> &flat)
{
    const int rows = 6, cols = (int)flat.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            m[r][c] = flat[c].x[r];
    std::vector<int> pivots;
    int rr = 0;
    for (int c = 0; c < cols && rr < rows; ++c) {
        int pr = -1;
        for (int r = rr; r < rows; ++r)
            if (m[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(m[rr], m[pr]);
        Rat pv = m[rr][c];
        for (int cc = 0; cc < cols; ++cc)
            m[rr][cc] /= pv;
        for (int r = 0; r < rows; ++r) {
            if (r == rr || m[r][c] == 0)
                continue;
            Rat f = m[r][c];
            for (int cc = 0; cc < cols; ++cc)
                m[r][cc] -= f * m[rr][cc];
        }
        pivots.push_back(c);
        ++rr;
    }
    std::vector<std::vector<Int>> basis;
    for (int c = 0; c < cols; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end())
            continue;
        std::vector<Rat> v(cols);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][c];
        Int den(1);
        for (const auto &x : v)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator(x).get_mpz_t());
        std::vector<Int> iv(cols);
        for (int i = 0; i < cols; ++i)
            iv[i] = numerator(v[i] * Rat(den));
        Int g(0);
        for (const auto &x : iv)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto &x : iv)
                x /= g;
        basis.push_back(iv);
    }
    return basis;
}

} // namespace

SolutionBasis solution_basis_check(const LaurentMonomialSystem &sys)
{
    // identical monomials span the same lattice direction: dedupe first
    auto all = flatten(sys);
    std::vector<LaurentMonomialSystem::Mono> flat;
    for (const auto &m : all) {
        bool seen = false;
        for (const auto &f : flat)
            if (f.x == m.x && f.t == m.t)
                seen = true;
        if (!seen)
            flat.push_back(m);
    }
    auto basis = x_kernel(flat);
    SolutionBasis out;
    out.rank = (int)basis.size();
    if (basis.empty())
        return out;
    // search small integer combinations for non-negative primitive lattice
    // vectors; the proof's generators are the minimal-t-degree ones
    const int B = 6;
    std::set<std::vector<int>> found;
    std::vector<int> y(basis.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == basis.size()) {
            std::vector<Int> v(flat.size());
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t c = 0; c < flat.size(); ++c)
                    v[c] += y[i] * basis[i][c];
            bool nonneg = true, nonzero = false;
            for (const auto &x : v) {
                if (x < 0)
                    nonneg = false;
                if (x != 0)
                    nonzero = true;
            }
            if (!nonneg || !nonzero)
                return;
            Int g(0);
            for (const auto &x : v)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            std::vector<int> vi(flat.size());
            for (size_t c = 0; c < flat.size(); ++c)
                vi[c] = (int)Int(v[c] / g).get_si();
            found.insert(vi);
            return;
        }
        for (y[k] = -B; y[k] <= B; ++y[k])
            rec(k + 1);
    };
    rec(0);
    // keep minimal vectors (not dominated componentwise by another candidate)
    std::vector<std::vector<int>> minimal;
    for (const auto &v : found) {
        bool dominated = false;
        for (const auto &w : found) {
            if (w == v)
                continue;
            bool le = true, lt = false;
            for (size_t c = 0; c < v.size(); ++c) {
                if (w[c] > v[c])
                    le = false;
                if (w[c] < v[c])
                    lt = true;
            }
            if (le && lt) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(v);
    }
    auto tdeg = [&](const std::vector<int> &v) {
        int d = 0;
        for (size_t c = 0; c < flat.size(); ++c)
            d += v[c] * flat[c].t;
        return d;
    };
    std::sort(minimal.begin(), minimal.end(),
              [&](const auto &a, const auto &b) {
                  int da = tdeg(a), db = tdeg(b);
                  return da != db ? da < db : a < b;
              });
    for (const auto &v : minimal) {
        if ((int)out.generators.size() == out.rank)
            break;
        out.generators.push_back(v);
        out.t_degrees.push_back(tdeg(v));
    }
    return out;
}

Rat constant_term_coefficient(const LaurentMonomialSystem &sys, int t_power,
                              bool naive)
{
    if (t_power == 0)
        return Rat(1);
    auto flat = flatten(sys);
    Rat total(0);
    if (naive) {
        std::vector<int> n(flat.size());
        std::function<void(size_t, int)> rec = [&](size_t k, int tleft) {
            if (k == flat.size()) {
                if (tleft != 0)
                    return;
                std::array<long, 6> xs{};
                for (size_t c = 0; c < flat.size(); ++c)
                    for (int r = 0; r < 6; ++r)
                        xs[r] += (long)n[c] * flat[c].x[r];
                for (long v : xs)
                    if (v != 0)
                        return;
                total += weight_of(sys, n);
                return;
            }
            for (int v = 0; v * flat[k].t <= tleft; ++v) {
                n[k] = v;
                rec(k + 1, tleft - v * flat[k].t);
            }
            n[k] = 0;
        };
        rec(0, t_power);
        return total;
    }
    for (size_t i = 0; i < flat.size(); ++i)
        for (size_t j = i + 1; j < flat.size(); ++j)
            if (flat[i].x == flat[j].x && flat[i].t == flat[j].t)
                throw error("lattice walk needs distinct monomials; use naive");
    SolutionBasis basis = solution_basis_check(sys);
    if (basis.rank == 0)
        return Rat(0);
    // walk non-negative combinations of the generators with matching t-degree
    std::vector<int> y(basis.generators.size());
    std::function<void(size_t, int)> walk = [&](size_t k, int tleft) {
        if (k == basis.generators.size()) {
            if (tleft != 0)
                return;
            std::vector<int> n(flat.size());
            for (size_t i = 0; i < basis.generators.size(); ++i)
                for (size_t c = 0; c < flat.size(); ++c)
                    n[c] += y[i] * basis.generators[i][c];
            total += weight_of(sys, n);
            return;
        }
        int d = basis.t_degrees[k];
        for (int v = 0; v * d <= tleft; ++v) {
            y[k] = v;
            walk(k + 1, tleft - v * d);
        }
        y[k] = 0;
    };
    walk(0, t_power);
    return total;
}

} // namespace pfcy
