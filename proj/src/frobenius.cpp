#include <pfcy/frobenius.hpp>

namespace pfcy {

namespace {

// truncated polynomials in eps, length = depth+1
using Eps = std::vector<Rat>;

Eps eps_mul(const Eps &a, const Eps &b)
{
    Eps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// p(n + eps) for a rational polynomial p, truncated
Eps eps_shift_eval(const QPoly &p, const Rat &n, size_t len)
{
    // Horner in (n + eps)
    Eps out(len);
    for (int i = (int)p.size() - 1; i >= 0; --i) {
        // out = out * (n + eps)
        Eps nx(len);
        for (size_t k = 0; k < len; ++k) {
            nx[k] += out[k] * n;
            if (k + 1 < len)
                nx[k + 1] += out[k];
        }
        nx[0] += p[i];
        out = std::move(nx);
    }
    return out;
}

// x with d * x = r, d[0] != 0 (division of eps-truncated polynomials)
Eps eps_div(const Eps &r, const Eps &d)
{
    Eps out(r.size());
    for (size_t k = 0; k < r.size(); ++k) {
        Rat s = r[k];
        for (size_t j = 0; j < k; ++j)
            s -= out[j] * d[k - j];
        out[k] = s / d[0];
    }
    return out;
}

} // namespace

FrobeniusBasis frobenius_basis(const ThetaOperator &L, int order, int depth)
{
    if (depth < 1 || depth > 3)
        throw error("frobenius_basis: depth must be 1, 2 or 3");
    if (!L.is_mum_at_origin())
        throw error("frobenius_basis: operator is not MUM at the origin");
    const size_t len = depth + 1;
    int deg = L.phi_degree();
    std::vector<QPoly> P(deg + 1);
    for (int j = 0; j <= deg; ++j)
        P[j] = L.column_poly(j);

    std::vector<Eps> a(order + 1, Eps(len));
    a[0][0] = 1; // a_0(eps) = 1
    for (int n = 1; n <= order; ++n) {
        Eps rhs(len);
        for (int j = 1; j <= std::min(n, deg); ++j) {
            Eps pj = eps_shift_eval(P[j], Rat(n - j), len);
            Eps t = eps_mul(pj, a[n - j]);
            for (size_t k = 0; k < len; ++k)
                rhs[k] -= t[k];
        }
        Eps p0 = eps_shift_eval(P[0], Rat(n), len);
        // MUM: p0 constant term is c_ord0 * n^ord != 0
        a[n] = eps_div(rhs, p0);
    }
    Series phi0(order), psi(order);
    for (int n = 0; n <= order; ++n) {
        phi0.mut(n) = a[n][0];
        psi.mut(n) = a[n][1];
    }
    FrobeniusBasis b(phi0, psi);
    if (depth >= 2) {
        Series l2(order);
        for (int n = 0; n <= order; ++n)
            l2.mut(n) = a[n][2];
        b.log2 = l2;
    }
    if (depth >= 3) {
        Series l3(order);
        for (int n = 0; n <= order; ++n)
            l3.mut(n) = a[n][3];
        b.log3 = l3;
    }
    return b;
}

Series mirror_map(const FrobeniusBasis &b, int order)
{
    Series ratio = b.psi.truncated(order).div(b.phi0.truncated(order));
    return Series::phi(order) * ratio.exp();
}

Series mirror_map(const ThetaOperator &L, int order)
{
    return mirror_map(frobenius_basis(L, order, 1), order);
}

Series inverse_mirror_map(const Series &q_of_phi)
{
    return q_of_phi.reversion();
}

std::vector<Series> apply_log_stratified(const ThetaOperator &L,
                                         const std::vector<Series> &strata)
{
    if (strata.empty())
        return {};
    int order = strata[0].order();
    size_t K = strata.size();
    // theta applied to the tuple: (theta s_k) + (k+1) s_{k+1}
    auto theta_tuple = [&](const std::vector<Series> &v) {
        std::vector<Series> out;
        out.reserve(K);
        for (size_t k = 0; k < K; ++k) {
            Series t = v[k].theta();
            if (k + 1 < K)
                t = t + Rat((long)k + 1) * v[k + 1];
            out.push_back(t);
        }
        return out;
    };
    std::vector<std::vector<Series>> theta_pows{strata};
    for (int i = 1; i <= L.order(); ++i)
        theta_pows.push_back(theta_tuple(theta_pows.back()));

    std::vector<Series> out(K, Series(order));
    for (int i = 0; i <= L.order(); ++i) {
        QPoly Ci = L.phi_poly(i);
        Series ci(order);
        for (size_t j = 0; j < Ci.size() && (int)j <= order; ++j)
            ci.mut((int)j) = Ci[j];
        for (size_t k = 0; k < K; ++k)
            out[k] = out[k] + ci * theta_pows[i][k];
    }
    int just = std::max(0, order - L.phi_degree());
    for (auto &s : out)
        s = s.truncated(just);
    return out;
}

} // namespace pfcy
