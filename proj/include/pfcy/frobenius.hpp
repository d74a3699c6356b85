#ifndef PFCY_FROBENIUS_HPP
#define PFCY_FROBENIUS_HPP

#include <pfcy/series.hpp>
#include <pfcy/theta_operator.hpp>

#include <optional>

namespace pfcy {

// Frobenius solutions at a MUM point. The log^k solution is
//   y_k = sum_{j<=k} binom(k,j) log^j(phi) * (k-j)!-normalized strata;
// concretely with Phi(phi,eps) = sum_n a_n(eps) phi^{n+eps},
//   phi0  = eps^0 stratum (constant term 1),
//   psi   = eps^1 stratum (Phi_1 = log(phi) phi0 + psi),
//   log2/log3 = eps^2 / eps^3 strata when requested.
struct FrobeniusBasis {
    Series phi0;
    Series psi;
    std::optional<Series> log2;
    std::optional<Series> log3;

    FrobeniusBasis(Series p0, Series ps) : phi0(std::move(p0)), psi(std::move(ps)) {}
};

// depth 1 yields phi0, psi; 2 and 3 add the higher strata.
FrobeniusBasis frobenius_basis(const ThetaOperator &L, int order, int depth = 1);

// q(phi) = phi * exp(psi / phi0); zero constant term, unit linear coefficient.
Series mirror_map(const FrobeniusBasis &b, int order);
Series mirror_map(const ThetaOperator &L, int order);

// phi(q) with q(phi(q)) = q to truncation order.
Series inverse_mirror_map(const Series &q_of_phi);

// Applies L to sum_k log^k(phi) s_k using
// Theta(log^k(phi) s) = log^k(phi) Theta s + k log^{k-1}(phi) s.
// Returns the log-power strata of the result; all zero iff L annihilates.
std::vector<Series> apply_log_stratified(const ThetaOperator &L,
                                         const std::vector<Series> &strata);

} // namespace pfcy

#endif
