#include <pfcy/enumerative.hpp>

namespace pfcy {

Series yukawa_phi(const ThetaOperator &L, int order)
{
    if (!L.is_mum_at_origin())
        throw error("yukawa_phi: operator is not MUM at the origin");
    QPoly C3 = L.phi_poly(L.order() - 1);
    QPoly C4 = L.phi_poly(L.order());
    if (!C3.empty() && C3[0] != 0)
        throw error("yukawa_phi: C3(0) != 0, integrand is not regular");
    Series c3(order), c4(order);
    for (size_t j = 0; j < C3.size() && (int)j <= order; ++j)
        c3.mut((int)j) = C3[j];
    for (size_t j = 0; j < C4.size() && (int)j <= order; ++j)
        c4.mut((int)j) = C4[j];
    Series ratio = c3.div(c4);
    return (Rat(-1, 2) * ratio.integrate_theta()).exp();
}

namespace {

// Theta(s)/s for s with unit constant term
Series theta_log(const Series &s) { return s.theta().div(s); }

struct QFrame {
    Series phi_of_q;  // phi(q)
    Series u;         // phi(q)/q, constant term 1
    Series v;         // (q dphi/dq)/q, constant term 1
    Series phi0_hat;  // Phi0(phi(q))
};

QFrame q_frame(const ThetaOperator &L, int order)
{
    FrobeniusBasis b = frobenius_basis(L, order, 1);
    Series q = mirror_map(b, order);
    Series phi_of_q = inverse_mirror_map(q);
    Series u(order), v(order);
    u.mut(0) = 1;
    v.mut(0) = 1;
    Series tphi = phi_of_q.theta();
    for (int i = 1; i <= order; ++i) {
        if (i + 1 <= order) {
            u.mut(i) = phi_of_q[i + 1];
            v.mut(i) = tphi[i + 1];
        } else {
            // shifting by one power of q costs the top coefficient
            u.mut(i) = 0;
            v.mut(i) = 0;
        }
    }
    // the shift is only justified one order lower
    int just = order - 1;
    return {phi_of_q.truncated(just), u.truncated(just), v.truncated(just),
            b.phi0.compose(phi_of_q).truncated(just)};
}

// n_d with G = sum_d m_d d^w q^d/(1-q^d), m given back per degree
std::map<int, Rat> multicover_invert(const Series &G, int max_d, int weight)
{
    std::map<int, Rat> m;
    for (int d = 1; d <= max_d; ++d) {
        if (d > G.order())
            throw error("multicover_invert: series order too small");
        Rat s = G[d];
        for (int e = 1; e < d; ++e)
            if (d % e == 0)
                s -= m[e] * rat_pow(Rat(e), weight);
        m[d] = s / rat_pow(Rat(d), weight);
    }
    return m;
}

} // namespace

Series yukawa_q(const ThetaOperator &L, const Rat &deg, int order)
{
    QFrame f = q_frame(L, order);
    int n = f.u.order();
    Series ratio = f.v.div(f.u); // q phi'(q)/phi(q)
    Series r3 = ratio * ratio * ratio;
    Series Ehat = yukawa_phi(L, order).compose(f.phi_of_q);
    Series out = r3 * Ehat.div(f.phi0_hat * f.phi0_hat);
    return deg * out.truncated(n);
}

GVTable gv_genus0(const Series &K, const Rat &deg, int max_d)
{
    if (K[0] != deg)
        throw error("gv_genus0: constant term of K differs from deg");
    Series G = K - Series::constant(deg, K.order());
    GVTable t;
    t.genus = 0;
    for (auto &[d, v] : multicover_invert(G, max_d, 3))
        t.entries[d] = v;
    return t;
}

namespace {

GVTable bcov_core(const ThetaOperator &L, const Rat &A, const Rat &B,
                  const Rat &c2H, const QPoly &disc, const GVTable &n0,
                  int max_d, int order)
{
    if (disc.empty() || disc[0] != 1)
        throw error("bcov_genus1: disc must be normalized with constant term 1");
    QFrame f = q_frame(L, order);
    int n = f.u.order();
    Series g(n);
    for (size_t j = 0; j < disc.size() && (int)j <= n; ++j)
        g.mut((int)j) = disc[j];
    Series ghat = g.compose(f.phi_of_q);

    // q dF1/dq, log q parts contributing the constant (1 - B)/2 = -c2H/24
    Series G = A * theta_log(f.phi0_hat) + theta_log(f.v) -
               Rat(1, 6) * theta_log(ghat) - B * theta_log(f.u);
    G = Rat(1, 2) * G;
    // shift by c2H/24; with B = c2H/12 + 1 the constant term cancels exactly
    G.mut(0) += Rat(1, 2) * (Rat(1) - B) + c2H / 24;
    if (G[0] != 0)
        throw error("bcov_genus1: internal constant-term mismatch");

    GVTable t;
    t.genus = 1;
    auto m = multicover_invert(G, max_d, 1);
    for (int d = 1; d <= max_d; ++d) {
        auto it = n0.entries.find(d);
        if (it == n0.entries.end())
            throw error("bcov_genus1: genus-0 table missing degree " +
                        std::to_string(d));
        t.entries[d] = m[d] - it->second / 12;
    }
    return t;
}

} // namespace

GVTable bcov_genus1(const ThetaOperator &L, const EnumerativeInputs &in,
                    const QPoly &disc, const GVTable &n0, int max_d, int order)
{
    Rat A = Rat(in.chi, 12) - 3 - in.h11;
    Rat B = Rat(in.c2H, 12) + 1;
    GVTable t = bcov_core(L, A, B, Rat(in.c2H), disc, n0, max_d, order);
    t.assumptions["disc"] = "conifold factor, exponent 1/6";
    return t;
}

GVTable gw_bps_convert(const GVTable &table, ConvertDirection dir, int max_d,
                       const GVTable *genus0)
{
    if (table.genus != 0 && table.genus != 1)
        throw error("gw_bps_convert: genus 0 or 1 only");
    GVTable out;
    out.genus = table.genus;
    out.family = table.family;
    if (table.genus == 0) {
        if (dir == ConvertDirection::bps_to_gw) {
            for (int d = 1; d <= max_d; ++d) {
                Rat s(0);
                for (int k = 1; k <= d; ++k)
                    if (d % k == 0) {
                        auto it = table.entries.find(d / k);
                        if (it != table.entries.end())
                            s += it->second / rat_pow(Rat(k), 3);
                    }
                out.entries[d] = s;
            }
        } else {
            std::map<int, Rat> n;
            for (int d = 1; d <= max_d; ++d) {
                auto it = table.entries.find(d);
                Rat s = it == table.entries.end() ? Rat(0) : it->second;
                for (int k = 2; k <= d; ++k)
                    if (d % k == 0)
                        s -= n[d / k] / rat_pow(Rat(k), 3);
                n[d] = s;
                out.entries[d] = s;
            }
        }
        return out;
    }
    // genus 1: sum_d N^1_d q^d = sum_d (n^0_d/12 + n^1_d) sum_k q^{kd}/k
    if (!genus0)
        throw error("gw_bps_convert: genus-1 conversion needs the genus-0 table");
    auto n0_at = [&](int d) {
        auto it = genus0->entries.find(d);
        return it == genus0->entries.end() ? Rat(0) : it->second;
    };
    if (dir == ConvertDirection::bps_to_gw) {
        for (int d = 1; d <= max_d; ++d) {
            Rat s(0);
            for (int k = 1; k <= d; ++k)
                if (d % k == 0) {
                    int e = d / k;
                    auto it = table.entries.find(e);
                    Rat n1 = it == table.entries.end() ? Rat(0) : it->second;
                    s += (n0_at(e) / 12 + n1) / k;
                }
            out.entries[d] = s;
        }
    } else {
        std::map<int, Rat> m;
        for (int d = 1; d <= max_d; ++d) {
            auto it = table.entries.find(d);
            Rat s = it == table.entries.end() ? Rat(0) : it->second;
            for (int k = 2; k <= d; ++k)
                if (d % k == 0)
                    s -= m[d / k] / k;
            m[d] = s;
            out.entries[d] = s - n0_at(d) / 12;
        }
    }
    return out;
}

GVTable virtual_invariants(const ThetaOperator &L_tilde, const Rat &virtual_deg,
                           int max_d, int order)
{
    Series K = yukawa_q(L_tilde, virtual_deg, order);
    GVTable t = gv_genus0(K, virtual_deg, max_d);
    t.assumptions["virtual_deg"] = rat_to_string(virtual_deg);
    return t;
}

GVTable virtual_invariants_genus1(const ThetaOperator &L_tilde,
                                  const Rat &virtual_deg, const Rat &c2H_virtual,
                                  const Rat &chi_virtual, const QPoly &disc,
                                  int max_d, int order)
{
    GVTable n0 = virtual_invariants(L_tilde, virtual_deg, max_d, order);
    Rat A = chi_virtual / 12 - 4; // h11 = 1 for one-parameter families
    Rat B = c2H_virtual / 12 + 1;
    GVTable t = bcov_core(L_tilde, A, B, c2H_virtual, disc, n0, max_d, order);
    t.assumptions["virtual_deg"] = rat_to_string(virtual_deg);
    return t;
}

} // namespace pfcy
