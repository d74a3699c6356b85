#include <pfcy/polynomial.hpp>

#include <algorithm>

namespace pfcy {

QPoly qp_trim(QPoly p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

int qp_degree(const QPoly &p)
{
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0)
            return i;
    return -1;
}

QPoly qp_add(const QPoly &a, const QPoly &b)
{
    QPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return qp_trim(out);
}

QPoly qp_sub(const QPoly &a, const QPoly &b)
{
    QPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return qp_trim(out);
}

QPoly qp_mul(const QPoly &a, const QPoly &b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return qp_trim(out);
}

QPoly qp_scale(const QPoly &a, const Rat &c)
{
    QPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = c * a[i];
    return qp_trim(out);
}

Rat qp_eval(const QPoly &p, const Rat &x)
{
    Rat out(0);
    for (int i = (int)p.size() - 1; i >= 0; --i)
        out = out * x + p[i];
    return out;
}

static std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly &b0)
{
    QPoly b = qp_trim(b0);
    if (b.empty())
        throw error("polynomial division by zero");
    a = qp_trim(std::move(a));
    if (a.size() < b.size())
        return {{}, a};
    QPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t d = a.size() - b.size();
        q[d] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[d + i] -= c * b[i];
        a = qp_trim(std::move(a));
        if (a.empty())
            break;
    }
    return {qp_trim(q), a};
}

QPoly qp_divexact(const QPoly &a, const QPoly &b)
{
    auto [q, r] = qp_divmod(a, b);
    if (!r.empty())
        throw error("polynomial division is not exact");
    return q;
}

QPoly qp_rem(QPoly a, const QPoly &b) { return qp_divmod(std::move(a), b).second; }

QPoly qp_gcd(QPoly a, QPoly b)
{
    a = qp_trim(std::move(a));
    b = qp_trim(std::move(b));
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1)
        a = qp_scale(a, Rat(1) / a.back());
    return a;
}

Int zp_content(const ZPoly &p)
{
    Int g(0);
    for (const auto &c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zp_from_qp(const QPoly &p)
{
    QPoly q = qp_trim(p);
    Int den(1);
    for (const auto &c : q)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator(c).get_mpz_t());
    ZPoly out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rat v = q[i] * Rat(den);
        out[i] = numerator(v);
    }
    Int g = zp_content(out);
    if (g > 1)
        for (auto &c : out)
            c /= g;
    return out;
}

QPoly qp_from_zp(const ZPoly &p)
{
    QPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        out[i] = Rat(p[i]);
    return out;
}

static std::vector<Int> divisors_of(Int n)
{
    n = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<Rat>, ZPoly> rational_roots(const ZPoly &p0)
{
    std::vector<Rat> roots;
    QPoly p = qp_from_zp(p0);
    p = qp_trim(p);
    // factor out x^k
    size_t k = 0;
    while (k < p.size() && p[k] == 0)
        ++k;
    for (size_t i = 0; i < k; ++i)
        roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + k);

    bool progress = true;
    while (progress && qp_degree(p) >= 1) {
        progress = false;
        ZPoly z = zp_from_qp(p);
        auto nums = divisors_of(z.front());
        auto dens = divisors_of(z.back());
        for (const auto &nu : nums) {
            for (const auto &de : dens) {
                for (int s : {1, -1}) {
                    Rat r(s * nu, de);
                    r.canonicalize();
                    if (qp_eval(p, r) == 0) {
                        roots.push_back(r);
                        p = qp_divexact(p, QPoly{-r, Rat(1)});
                        progress = true;
                        goto deflated;
                    }
                }
            }
        }
    deflated:;
    }
    std::sort(roots.begin(), roots.end());
    return {roots, zp_from_qp(p)};
}

Factorization factor_rational_quadratic(const QPoly &p0)
{
    Factorization out;
    QPoly p = qp_trim(p0);
    if (p.empty()) {
        out.content = 0;
        return out;
    }
    ZPoly z = zp_from_qp(p);
    auto [roots, rest] = rational_roots(z);
    for (size_t i = 0; i < roots.size();) {
        size_t j = i;
        while (j < roots.size() && roots[j] == roots[i])
            ++j;
        ZPoly lin{-numerator(roots[i]), denominator(roots[i])};
        out.factors.push_back({lin, (int)(j - i)});
        i = j;
    }
    int d = (int)rest.size() - 1;
    if (d == 1 || d == 2) {
        if (rest.back() < 0)
            for (auto &c : rest)
                c = -c;
        out.factors.push_back({rest, 1});
    } else if (d > 2) {
        // degree >= 3 with no rational root; the corpus never produces one
        out.unfactored = rest;
    }
    // content = p / product of factors
    QPoly prod{Rat(1)};
    for (const auto &f : out.factors) {
        QPoly fq = qp_from_zp(f.factor);
        for (int m = 0; m < f.multiplicity; ++m)
            prod = qp_mul(prod, fq);
    }
    if (!out.unfactored.empty())
        prod = qp_mul(prod, qp_from_zp(out.unfactored));
    QPoly ratio = qp_divexact(p, prod);
    if (qp_degree(ratio) != 0)
        throw error("internal: factorization does not multiply back");
    out.content = ratio[0];
    return out;
}

} // namespace pfcy
