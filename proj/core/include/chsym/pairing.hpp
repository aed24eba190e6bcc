#pragma once

/*
  pairing.hpp

  The pair calculus for character-sheaf labels (Lambda, Xi) whose defects
  differ by at most one.  After aligning representatives (equal bottom-row
  sizes, every row containing a zero) the pair falls into one of the cases

    B:   (d(Lambda), d(Xi)) = (2t+1, 2t+1)
    C.1: (4t, 4t+1)    C.2: (4t, 4t-1)    D: (4t, 4t)

  and the entrywise sums oplus (and, at t = 0, the crossed sums boxplus)
  produce a Springer symbol.  a(Lambda) + a(Xi) <= b(oplus) always, with
  equality exactly under the interleaving condition; the pairs achieving
  equality inside a product of similarity classes V x W form the set J,
  enumerated by two-valued functions on the interval classes of the merged
  entry sequences.  |J| = 2^{l-1} (type B) or 2^{l-2} (types C/D) where l
  counts the non-degenerate interval classes.
*/

#include <optional>
#include <vector>

#include "chsym/context.hpp"
#include "chsym/springer.hpp"
#include "chsym/symbol.hpp"

namespace chsym {

enum class PairCase : std::uint8_t { B, C1, C2, D };

std::string to_string(PairCase c);

struct PairError : std::invalid_argument {
  enum class Kind { EpsilonTooLarge, FamilyMismatch };
  PairError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
  Kind kind;
};

struct SymbolPair {
  GroupType type = GroupType::B;
  PairCase pcase = PairCase::B;
  int t = 0;
  int p = 0;  // common bottom-row size of the aligned representative
  /// Aligned representatives.  lambda/xi keep the orientation used for
  /// oplus: the top rows are the case's a-rows.
  Symbol lambda, xi;
  /// Decorations of the input labels (degenerate classes are decorated
  /// singletons; the aligned representatives themselves are undecorated).
  Decoration lambda_decoration = Decoration::None;
  Decoration xi_decoration = Decoration::None;

  /// a-rows including the index-0 extra entry where the case has one
  /// (C.1: xi's top has a'_0; C.2: lambda's top has a_0).
  const BetaSet& a_row() const { return lambda.top(); }
  const BetaSet& b_row() const { return lambda.bottom(); }
  const BetaSet& a_row2() const { return xi.top(); }
  const BetaSet& b_row2() const { return xi.bottom(); }
};

/// epsilon = |d(Lambda) - d(Xi)| over the orientations the families allow.
int epsilon(const Symbol& lambda, const Symbol& xi);

/// Aligned pair at the smallest bottom-row size >= min_p both classes
/// admit; throws PairError (EpsilonTooLarge carries the zero branch of
/// the character value).
SymbolPair make_pair(const Symbol& lambda, const Symbol& xi, GroupType type,
                     int min_p = 0);

/// The same pair shifted until every row contains a zero (the alignment
/// the interval construction needs).
SymbolPair zero_aligned(const SymbolPair& pair);

/// The entrywise-sum Springer symbol: kind X for cases B/D (rank 2n+1 or
/// 2n), kind Y for C.1/C.2 (rank 2n).
SpringerSymbol oplus(const SymbolPair& pair);

/// The crossed sums, defined for cases C.1 and D with t = 0; equals oplus
/// of the pair with lambda's rows exchanged.
SpringerSymbol boxplus(const SymbolPair& pair);

struct EqualityConditions {
  bool cond1 = false;                 // a(Lambda)+a(Xi) == b(oplus)
  std::optional<bool> cond2;          // == b(boxplus), when defined
  bool cond3 = false;                 // a_i == b_i or a'_i == b'_i for all i
};

/// cond3 is evaluated on the zero-aligned representative, the alignment
/// under which the equality characterizations hold.  cond1 and cond2 use
/// shift-invariant statistics.  Note: cond1 and cond2 together imply
/// cond3, and cond3 forces b(oplus) = b(boxplus); the converse
/// (cond3 implies the equalities) holds when neither factor is
/// degenerate but fails vacuously otherwise.
EqualityConditions equality_conditions(const SymbolPair& pair);

/// The entrywise interleaving: for all i, j >= 1 either a_i <= b_j and
/// a'_i <= b'_j, or both >=, at the zero-aligned representative.
/// Equivalent to cond1.
bool interleaving_condition(const SymbolPair& pair);

struct IntervalStructure {
  std::vector<int> c, d;      // merged entry sequences over the index set L
  int index_origin = 1;       // first index of L
  struct Interval {
    int first = 0, last = 0;  // inclusive index range
    bool degenerate = false;  // {i,i+1} with c_i=c_{i+1} and d_i=d_{i+1}
    int size() const { return last - first + 1; }
  };
  std::vector<Interval> classes;
  int num_nondegenerate = 0;
  int num_degenerate = 0;
  /// indices into classes: odd-cardinality classes, plus I_0 in the C.2
  /// exception when |I_0| is even
  std::vector<int> tilde;
  int i0 = 0;  // index into classes of the class containing the first index
};

IntervalStructure interval_structure(const SymbolPair& pair);

struct JSetResult {
  std::vector<std::pair<Symbol, Symbol>> members;  // canonically ordered
  int ell = 0;                   // non-degenerate interval classes
  long long formula_size = 0;    // 2^{l-1} or 2^{l-2}
  long long admitted_functions = 0;
  IntervalStructure intervals;
  /// The closed cardinality formula presumes at least one class in tilde-L
  /// of even count (types C/D) and l >= 1; tiny classes can fall outside.
  bool within_formula_hypotheses = true;
};

/// Enumerates J from a base pair's interval structure; members lie in the
/// product of the similarity classes of the base pair.
JSetResult enumerate_jset(const SymbolPair& base);

/// epsilon <= 1 and cond1 under some row orientation of the defect-0
/// factors; agrees with enumerate_jset membership.
bool j_membership(const Symbol& lambda, const Symbol& xi, GroupType type);

}  // namespace chsym
