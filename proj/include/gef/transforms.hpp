#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gef {

// Moment -> cumulant transform over set partitions:
//   s_k = sum_{l=1}^{k} (-1)^{l-1} (l-1)! sum_{pi in Pi(k,l)} m_{p_1} ... m_{p_l}
// Input m_1..m_k (k <= 12); compensated summation throughout.
std::vector<double> moments_to_cumulants(std::span<const double> moments);

// Inverse transform m_k = sum_{pi in Pi(k)} s_{p_1} ... s_{p_t}.
std::vector<double> cumulants_to_moments(std::span<const double> cumulants);

// Subset-indexed correlation values: entry [mask] holds rho(Z_S) for the
// subset S of {0..k-1} encoded by mask (1 <= mask < 2^k).  Entry 0 unused.
using SubsetValues = std::vector<double>;

// Truncated (Ursell) function of the full set from per-subset correlations:
//   rho_k^T(Z) = sum_l (-1)^{l-1} (l-1)! sum_{pi in Pi(k,l)} prod_t rho(Z_{pi_t}).
// Requires every non-empty subset entry to be present (finite); missing
// entries raise IncompleteInputError.  k <= 12.
double truncated_from_correlations(int k, const SubsetValues& rho);

// Applies the transform above to every subset: out[mask] = rho^T(Z_mask).
SubsetValues ursell_from_correlations(int k, const SubsetValues& rho);

// Inverse: rho(Z) = sum_{pi in Pi(Z)} prod_t rho^T(Z_{pi_t}) for every subset.
SubsetValues correlations_from_ursell(int k, const SubsetValues& rho_t);

// Bracket supplier for linear-statistic formulas: given block sizes
// (p_1, ..., p_j), returns the truncated integral <h^{p_1}, ..., h^{p_j}>^T.
using BracketFn = std::function<double(const std::vector<int>& sizes)>;

// k-th cumulant of the linear statistic n(h):
//   s_k(h) = sum_{gamma in Pi(k)} <h^{|gamma_1|}, ..., h^{|gamma_j|}>^T.
double statistic_cumulant(int k, const BracketFn& truncated_bracket);

// Companion moment formula m_k(h) = sum_{gamma in Pi(k)} m(h, P_gamma); the
// plain brackets are assembled from the truncated ones by the exact
// factorization m(h, P) = sum_{pi in Pi(j)} prod_t <...>^T, so both formulas
// share one set of integral primitives.
double statistic_moment(int k, const BracketFn& truncated_bracket);

}  // namespace gef
