#pragma once

/*
  springer.hpp

  The symbol combinatorics of the generalised Springer correspondence for
  the classical groups.

  Two flavours of symbol occur.  Kind Y: ordered pairs (X;Y) with
  X in N_0, Y in N (no zero), |X|+|Y| odd, no two consecutive integers in
  a row, and entry sum  N/2 + s(s-1)/2  (s = |X|+|Y|, N even).  Kind X:
  unordered pairs, rows in N_0, no consecutive integers, entry sum
  (N + s(s-2))/2.  Both carry a kind-specific shift; classes under shift
  are the objects of interest.

  Pi raises defect 1 to defect d by prefixing a spread-out staircase;
  Theta / Theta' / ThetaBar / ThetaT turn a defect-0 two-row symbol into
  a defect-1 (or 0) Springer symbol; Delta composes them per group type
  and block parameter.  b is Lusztig's b-function: the entry-weighted sum
  against the kind's reference staircase; under the correspondence it is
  the dimension of the Springer fibre, and |Phi| - 2 b is the orbit
  dimension.
*/

#include <string>
#include <vector>

#include "chsym/context.hpp"
#include "chsym/symbol.hpp"

namespace chsym {

enum class SpringerKind : std::uint8_t { X, Y };

class SpringerSymbol {
public:
  SpringerSymbol() = default;

  /// Validates the row conditions for the kind.  Kind X canonicalizes the
  /// row order (longer row first; ties lexicographically).
  SpringerSymbol(SpringerKind kind, std::vector<int> top, std::vector<int> bottom);

  SpringerKind kind() const { return kind_; }
  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }

  friend auto operator<=>(const SpringerSymbol&, const SpringerSymbol&) = default;

private:
  SpringerKind kind_ = SpringerKind::X;
  std::vector<int> top_, bottom_;
};

/// The N with s in Psi_N, recovered from the entry sum.
long long springer_rank(const SpringerSymbol& s);

/// |top|-|bottom|; canonically >= 0 for kind X, signed for kind Y.
int springer_defect(const SpringerSymbol& s);

/// Detailed validation; throws naming the violated condition, and checks
/// the declared rank when expected_rank >= 0.
SpringerSymbol validate_springer(SpringerKind kind, std::vector<int> top,
                                 std::vector<int> bottom,
                                 long long expected_rank = -1);

SpringerSymbol springer_shift(const SpringerSymbol& s, int k);
SpringerSymbol springer_normalize(const SpringerSymbol& s);
bool springer_equivalent(const SpringerSymbol& a, const SpringerSymbol& b);

/// Defect-1 to defect-d bijection (d odd of any sign for kind Y, d >= 1
/// for kind X); d = 1 is the identity.  Rank grows by d(d-1) resp. d^2-1.
SpringerSymbol pi_bijection(const SpringerSymbol& s, int d);

/// Inverse: strips the staircase prefix back to the defect-1 source.
SpringerSymbol pi_inverse(const SpringerSymbol& s);

enum class ThetaVariant : std::uint8_t { Theta, ThetaPrime, ThetaBar, ThetaT };

/// The defect-0 symbol (A;B), |A| = |B| = s, maps to
///   Theta     -> Y-kind ({0, a_i+i+1} ; {b_i+i})          in Y_{2n}^1
///   ThetaT    -> Theta of the row-swapped symbol
///   ThetaPrime-> X-kind ({0, a_i+i+1} ; {b_i+i-1})        in X_{2n+1}^1
///   ThetaBar  -> X-kind ({a_i+i-1} ; {b_i+i-1})           in X_{2n}^0
/// (1-based i).  Both decorations of a degenerate symbol have the same
/// ThetaBar image.
SpringerSymbol theta_map(const Symbol& defect0, ThetaVariant variant);

/// Inverse of theta_map on its image.
Symbol theta_inverse(const SpringerSymbol& s, ThetaVariant variant);

/// The embedding of block-Levi labels into Springer symbols:
///   B, t>=0: Pi^{2t+1} . ThetaPrime     C, d=4t+1: Pi^{4t+1} . Theta
///   C, d=1-4t (t>=1): Pi^{1-4t} . ThetaT
///   D, t>=1: Pi^{4t} . ThetaPrime       D, t=0:   ThetaBar
SpringerSymbol delta_map(const Symbol& defect0, const GroupContext& ctx);

/// sigma = sum (2k-i) x_i on the given representative.
long long sigma_springer(const SpringerSymbol& s);

/// b = sum (2k-i)(x_i - x0_i), against the reference staircase
///   kind Y:            0,1,2,...,2k
///   kind X, N even:    0,0,2,2,...,2(k-1),2(k-1)
///   kind X, N odd:     0,0,2,2,...,2(k-1),2(k-1),2k
/// Shift-invariant.
long long b_value(const SpringerSymbol& s);

/// b after delta_map for the context.
long long b_delta(const Symbol& defect0, const GroupContext& ctx);

/// Equal row union and intersection at a common entry count.
bool springer_similar(const SpringerSymbol& a, const SpringerSymbol& b);

/// Same kind, same rank, both non-degenerate: similarity decides equality
/// of the attached unipotent classes.  Degenerate input is rejected.
bool same_unipotent_class(const SpringerSymbol& a, const SpringerSymbol& b);

bool springer_degenerate(const SpringerSymbol& s);

struct ClassDimension {
  long long dim_springer_fibre = 0;  // b-value
  long long dim_orbit = 0;           // |Phi| - 2 b
};

/// Requires springer_rank(s) = 2n+1 (B) or 2n (C/D) for ctx.
ClassDimension class_dimension(const SpringerSymbol& s, const GroupContext& ctx);

std::string to_string(const SpringerSymbol& s);

/// All normalized symbols of the kind with springer_rank <= max_rank.
std::vector<SpringerSymbol> springer_symbols_up_to(SpringerKind kind,
                                                   long long max_rank);

}  // namespace chsym
