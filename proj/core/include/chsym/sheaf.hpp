#pragma once

/*
  sheaf.hpp

  Character-sheaf-side bookkeeping at the symbol level: the embedding of
  block-Levi labels into the full labelling sets, the semisimple rank read
  off a pair, symbolic characteristic-function values at split unipotent
  elements, entry-decrement restriction rules, the small test family used
  to separate sheaves with equal restrictions, multiplicity magnitudes,
  and the cuspidal-scalar congruence.
*/

#include <optional>
#include <vector>

#include "chsym/context.hpp"
#include "chsym/pairing.hpp"
#include "chsym/springer.hpp"
#include "chsym/symbol.hpp"

namespace chsym {

/// A signed power of q; sign 0 encodes the zero value.
struct QValue {
  int sign = 0;             // -1, 0, +1
  long long q_exponent = 0; // meaningful when sign != 0
  friend bool operator==(const QValue&, const QValue&) = default;
};

/// The label embedding: defect raising to (2t+1,2t+1) (B), (4t,4t+1) or
/// (4t,4t-1) (C), (4t,4t) (D); the identity for types C/D at t = 0.
/// Inputs of defect 0 on a defect-1 slot pass through the natural
/// defect-0 -> defect-1 bijection first.
std::pair<Symbol, Symbol> phi_embed(const Symbol& first, const Symbol& second,
                                    const GroupContext& ctx);

/// Inverse on the image.
std::pair<Symbol, Symbol> phi_inverse(const Symbol& lambda, const Symbol& xi,
                                      const GroupContext& ctx);

/// Characteristic-function value at a split element of the class attached
/// to the pair: zero off J, otherwise eps * (-1)^n q^{b + m/2}.
QValue char_value(const Symbol& lambda, const Symbol& xi,
                  const GroupContext& ctx);

/// All labels obtained by decrementing one entry of the chosen side
/// (degenerate results in both decorations), paired with the unchanged
/// other side.
enum class RestrictSide : std::uint8_t { First, Second };
std::vector<std::pair<Symbol, Symbol>> restrict_labels(const Symbol& lambda,
                                                       const Symbol& xi,
                                                       RestrictSide side);

/// Decrement-by-one restriction of a single symbol.
std::vector<Symbol> decrement_labels(const Symbol& s);

/// Which relative factor carries the small family: b_prime means b' = 0
/// (the family varies on the first factor), a_prime means a' = 0.
enum class XiSideMode : std::uint8_t { BPrimeZero, APrimeZero };

struct XiFamily {
  Symbol fixed_cuspidal;    // the a' = 0 (or b' = 0) factor
  Symbol varying_cuspidal;  // Xi^0: the embedded rank-0 label on the other side
  std::vector<Symbol> xi;   // Xi^1..Xi^7 embedded by phi (index i-1)
  std::vector<SpringerSymbol> sums;  // index 0..7: oplus of the i-th pair
  bool inequalities_hold = false;    // b(1)<b(2), b(3)<b(4), b(6)<b(7)
};

XiFamily xi_family(const GroupContext& ctx, XiSideMode mode);

/// Squared multiplicity magnitude of a character sheaf in the twisted
/// intertwining basis: 1/(|V||W|) on matching similarity classes, else 0.
struct MagnitudeResult {
  long long num = 0, den = 1;  // num/den
};
MagnitudeResult multiplicity_magnitude(const Symbol& lambda, const Symbol& xi,
                                       const Symbol& lambda1, const Symbol& xi1,
                                       const GroupContext& ctx);

/// The unique zeta in {+1,-1} with zeta + 2^l - 1 = 0 mod 4, for l >= 2;
/// nullopt for l < 2 (the congruence does not pin the sign).
std::optional<int> cuspidal_scalar(int ell);

/// Labeling family of each factor for the context's type.
LabelSetSpec omega_side_spec(const GroupContext& ctx);
LabelSetSpec phi_side_spec(const GroupContext& ctx);

}  // namespace chsym
