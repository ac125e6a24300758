#pragma once

#include <vector>

#include "umbral/compute.hpp"
#include "umbral/fraction.hpp"
#include "umbral/multiset.hpp"
#include "umbral/partitions.hpp"
#include "umbral/sym_expr.hpp"

namespace umbral {

/// i-th cumulant in univariate moments m_j:
/// sum over lambda |- i of x_(nu) d_lambda prod m_{parts}.
SymExpr cumulants_from_moments(int i);

/// Joint cumulant kappa_T in moments m_v, for T a multiset of exponent
/// vectors (the univariate i-th cumulant is T = {(1)^i}).
SymExpr joint_cumulant(const Multiset<ExpVec>& t);

/// Product of joint cumulants, one per group, in moments.
SymExpr cumulant_product(const std::vector<Multiset<ExpVec>>& groups);

/// U-statistic for prod m_v: AUG[parts] / (n)_k. With want_power_sums the
/// bracket is rewritten in power sums and the fraction is reduced; otherwise
/// the denominator is kept as the single atom (n)_k.
Fraction u_statistic(const std::vector<ExpVec>& parts, bool want_power_sums,
                     const ComputeOptions& options = {}, ComputeStats* stats = nullptr);
Fraction u_statistic(const IntegerPartition& lambda, bool want_power_sums,
                     const ComputeOptions& options = {}, ComputeStats* stats = nullptr);

/// Unbiased estimator of the i-th cumulant in power sums, reduced over a
/// common denominator. The formula needs n >= i to be meaningful; it is
/// produced symbolically for any n.
Fraction k_statistic(int i, const ComputeOptions& options = {}, ComputeStats* stats = nullptr);

/// Unbiased estimator of kappa_{r_1} ... kappa_{r_m}.
Fraction polykay(const std::vector<int>& orders, const ComputeOptions& options = {},
                 ComputeStats* stats = nullptr);

/// Unbiased estimator of the joint cumulant kappa_T.
Fraction multivariate_k_statistic(const Multiset<ExpVec>& t, const ComputeOptions& options = {},
                                  ComputeStats* stats = nullptr);

/// Unbiased estimator of kappa_T * ... * kappa_L, one group per factor.
/// All vectors must share one arity.
Fraction multivariate_polykay(const std::vector<Multiset<ExpVec>>& groups,
                              const ComputeOptions& options = {}, ComputeStats* stats = nullptr);

/// Sum of |v| over every part of every group.
int total_degree(const std::vector<Multiset<ExpVec>>& groups);

}  // namespace umbral
