#ifndef PFCY_ENUMERATIVE_HPP
#define PFCY_ENUMERATIVE_HPP

#include <pfcy/frobenius.hpp>
#include <pfcy/polynomial.hpp>
#include <pfcy/series.hpp>
#include <pfcy/theta_operator.hpp>

#include <map>
#include <string>

namespace pfcy {

struct GVTable {
    int genus = 0;
    std::map<int, Rat> entries; // degree -> n_d
    std::string family;
    std::map<std::string, std::string> assumptions;

    bool all_integral() const
    {
        for (const auto &[d, v] : entries)
            if (!is_integer(v))
                return false;
        return true;
    }
};

struct EnumerativeInputs {
    long deg;  // int_X H^3
    long c2H;  // int_X c2(X).H
    long chi;  // Euler number, 2(h11 - h12)
    long h11;
};

// E(phi) = exp(-1/2 int_0^phi C3/C4 dx/x), constant term 1. The full coupling
// is K_ppp = deg * phi^-3 * E(phi); the phi^-3 prefactor stays symbolic.
Series yukawa_phi(const ThetaOperator &L, int order);

// K_ttt(q) = deg (q phi'(q)/phi(q))^3 E(phi(q)) / Phi0(phi(q))^2.
Series yukawa_q(const ThetaOperator &L, const Rat &deg, int order);

// Solve K = deg + sum_d n_d d^3 q^d/(1-q^d) for n_d, d = 1..max_d.
GVTable gv_genus0(const Series &K, const Rat &deg, int max_d);

// BCOV: from q dF1/dq with
//   F1 = 1/2 log[ Phi0^{chi/12-3-h11} (q dphi/dq) / (disc^{1/6} phi^{c2H/12+1}) ],
// extract n^1_d from q dF1/dq + c2H/24 = sum_d (n^0_d/12 + n^1_d) d q^d/(1-q^d).
// disc must have constant term 1.
GVTable bcov_genus1(const ThetaOperator &L, const EnumerativeInputs &in,
                    const QPoly &disc, const GVTable &n0, int max_d, int order);

enum class ConvertDirection { bps_to_gw, gw_to_bps };

// Genus 0: N_d = sum_{k|d} n_{d/k} / k^3. Genus 1 works at the F1 level:
// sum N^1_d q^d = sum_d (n^0_d/12 + n^1_d) sum_k q^{kd}/k, so the genus-0
// BPS table must be supplied for genus 1.
GVTable gw_bps_convert(const GVTable &table, ConvertDirection dir, int max_d,
                       const GVTable *genus0 = nullptr);

// Same genus-0 pipeline with caller-supplied virtual degree; integrality is
// not asserted.
GVTable virtual_invariants(const ThetaOperator &L_tilde, const Rat &virtual_deg,
                           int max_d, int order);

// Genus-1 variant for virtual geometries, with caller-supplied inputs.
GVTable virtual_invariants_genus1(const ThetaOperator &L_tilde,
                                  const Rat &virtual_deg, const Rat &c2H_virtual,
                                  const Rat &chi_virtual, const QPoly &disc,
                                  int max_d, int order);

} // namespace pfcy

#endif
