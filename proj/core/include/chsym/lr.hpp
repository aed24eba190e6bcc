#pragma once

/*
  lr.hpp

  Littlewood-Richardson coefficients by direct enumeration of lattice-word
  skew tableaux, memoized.  The memo table may be read concurrently; the
  population path is guarded and deterministic.
*/

#include "chsym/beta_set.hpp"

namespace chsym {

/// Number of LR fillings of nu/lambda with content mu.  Zero when the
/// shapes are incompatible; |nu| = |lambda| + |mu| is required for a
/// nonzero value, and |nu| != |lambda| + |mu| simply yields 0.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

/// Beta-set form: coefficient of the partitions encoded by X, Y, Z.
long long lr_coefficient(const BetaSet& x, const BetaSet& y, const BetaSet& z);

}  // namespace chsym
