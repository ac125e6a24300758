#pragma once

#include <map>
#include <vector>

#include "umbral/compute.hpp"
#include "umbral/monomial.hpp"
#include "umbral/multiset.hpp"
#include "umbral/sym_expr.hpp"

namespace umbral {

/// Product of power sums S_{v_1} S_{v_2} ... keyed by its sorted index list.
using PowerSumKey = std::vector<ExpVec>;
/// Integer combination of power-sum products.
using PowerSumPoly = std::map<PowerSumKey, Integer>;

SymExpr to_expr(const PowerSumPoly& p);

/// Product of power sums indexed by the elements of M, written in
/// augmented brackets: sum over subdivisions S of M of the multiplicity
/// times the bracket whose parts are the merged blocks of S.
///
/// Throws std::invalid_argument for an empty M, a labeled element or a unit
/// monomial; GuardViolation when |M| exceeds options.max_order.
SymExpr ps_to_aug(const Multiset<Monomial>& m, const ComputeOptions& options = {},
                  ComputeStats* stats = nullptr);

/// Augmented bracket written in power sums: sum over subdivisions S of the
/// parts of the multiplicity times prod_blocks x_(|block|) S_{merged block},
/// with x_(k) = (-1)^(k-1) (k-1)!.
SymExpr aug_to_ps(const Bracket& b, const ComputeOptions& options = {},
                  ComputeStats* stats = nullptr);

/// aug_to_ps without building a SymExpr.
PowerSumPoly aug_to_ps_poly(const Bracket& b, const ComputeOptions& options = {},
                            ComputeStats* stats = nullptr);

/// Rewrites every bracket atom of e in power sums.
SymExpr brackets_to_power_sums(const SymExpr& e, const ComputeOptions& options = {});

/// Rewrites every power-sum product of e in brackets.
SymExpr power_sums_to_brackets(const SymExpr& e, const ComputeOptions& options = {});

/// Product of augmented brackets, itself written in brackets.
///
/// Each input bracket gets its own singleton label, shared by all of its
/// parts, so two parts of the same bracket never meet in one block.
/// Subdivisions that would do so are never generated and do not appear in
/// the result. All brackets must share one arity.
SymExpr aug_product(const std::vector<Bracket>& brackets, const ComputeOptions& options = {},
                    ComputeStats* stats = nullptr);

/// Expectation under i.i.d. sampling: AUG[v_1 ... v_k] -> (n)_k m_{v_1} ... m_{v_k}.
/// Throws std::invalid_argument if e holds power sums or moments.
SymExpr expectation_of_brackets(const SymExpr& e);

}  // namespace umbral
