#pragma once

/*
  beta_set.hpp

  Beta-sets: finite strictly increasing sets of non-negative integers.
  A beta-set of size s encodes the partition (b_s-(s-1), ..., b_2-1, b_1)
  and two beta-sets encode the same partition exactly when one is a shift
  of the other, where the shift by k prepends {0,...,k-1} and adds k to
  every entry.  This module also carries the dominance order and the
  entrywise sum (odot), both computed on representatives of a common size.
*/

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chsym {

/// Weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;

class BetaSet {
public:
  BetaSet() = default;

  /// Validates: entries non-negative, strictly increasing after sorting,
  /// no duplicates.  Accepts unsorted input.
  explicit BetaSet(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  bool contains(int x) const;
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

  friend auto operator<=>(const BetaSet&, const BetaSet&) = default;

private:
  std::vector<int> entries_;
};

/// sum of entries - C(size, 2); the size of the encoded partition.
long long beta_rank(const BetaSet& b);

/// {0,...,k-1} u {x+k : x in b}.
BetaSet beta_shift(const BetaSet& b, int k);

/// The unique shift-minimal representative: contains no 0, or is empty.
BetaSet beta_normalize(const BetaSet& b);

bool beta_equivalent(const BetaSet& a, const BetaSet& b);

/// Largest k with beta_shift(beta_normalize(b), k) == b.
int beta_shift_depth(const BetaSet& b);

bool is_valid_partition(const Partition& p);

/// Partition of beta_rank(b), read off a size-s representative.
Partition beta_to_partition(const BetaSet& b);

/// Representative with `rows` entries; requires rows >= #parts.
BetaSet partition_to_beta(const Partition& p, int rows);

/// a "dominated by" b: suffix sums of a bounded by those of b once both
/// are shifted to a common size.  Requires equal rank.
bool dominance_leq(const BetaSet& a, const BetaSet& b);

/// Entrywise sum at a common size s: {a_1+b_1 < a_2+b_2-1 < ...};
/// equals part-wise addition of the encoded partitions.
BetaSet odot(const BetaSet& a, const BetaSet& b);

std::string to_string(const BetaSet& b);

/// All beta-sets of the given rank with exactly `rows` entries.
std::vector<BetaSet> beta_sets_of_rank(long long rank, int rows);

/// All partitions of n (n >= 0).
std::vector<Partition> partitions_of(int n);

}  // namespace chsym
