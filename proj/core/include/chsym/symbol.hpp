#pragma once

/*
  symbol.hpp

  Symbols: pairs of beta-sets up to simultaneous shift.  Ordered symbols
  have a signed defect |top|-|bottom|; unordered symbols identify the two
  row orders and carry a non-negative defect.  A defect-0 symbol with
  equal rows is degenerate and, in the unordered labelling sets, splits
  into two decorated copies which form similarity classes of size one.

  The labelling families used for character sheaves:

    Phi+   ordered,   defects odd and positive
    Phi-   ordered,   non-degenerate defect 0 together with defects = 0 mod 4, nonzero
    Omega+ unordered, defects = 0 mod 4 (including 0, with decorated degenerates)
    Omega- unordered, defects = 2 mod 4
    V0/V1  ordered defect 0 / defect 1
    Vbar0  unordered defect 0 with decorated degenerates

  Similarity: equal row union and row intersection once both symbols are
  shifted to the same total entry count.  It is the combinatorial shadow
  of families of characters; classes may mix defects within a family.
*/

#include <optional>
#include <string>
#include <vector>

#include "chsym/beta_set.hpp"

namespace chsym {

enum class Decoration : std::uint8_t { None, Plus, Minus };

class Symbol {
public:
  Symbol() = default;

  /// Unordered symbols are stored with the longer row on top (for equal
  /// sizes, the lexicographically smaller row).  A decoration is only
  /// allowed on unordered symbols with equal rows.
  Symbol(BetaSet top, BetaSet bottom, bool ordered = true,
         Decoration dec = Decoration::None);

  const BetaSet& top() const { return top_; }
  const BetaSet& bottom() const { return bottom_; }
  bool ordered() const { return ordered_; }
  Decoration decoration() const { return dec_; }

  Symbol swapped() const;      // rows exchanged (ordered symbols)
  Symbol with_decoration(Decoration d) const;
  Symbol without_decoration() const;
  Symbol as_unordered() const;
  Symbol as_ordered() const;   // drops decoration, keeps stored row order

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
  BetaSet top_, bottom_;
  bool ordered_ = true;
  Decoration dec_ = Decoration::None;
};

/// |top| - |bottom|; >= 0 for unordered symbols by canonical row order.
int symbol_defect(const Symbol& s);

/// rank(top) + rank(bottom) + floor((defect/2)^2).
long long symbol_rank(const Symbol& s);

Symbol symbol_shift(const Symbol& s, int k);

/// Shift-minimal representative (cannot drop a common leading zero).
Symbol symbol_normalize(const Symbol& s);

bool symbol_equivalent(const Symbol& a, const Symbol& b);

/// Total order on equivalence classes; used for map keys and sorting.
bool symbol_class_less(const Symbol& a, const Symbol& b);

bool is_degenerate(const Symbol& s);

/// Bottom row ~ empty and top an initial segment {0..K} with K >= 2:
/// {0..2d} of rank d^2+d (d >= 1) or {0..2d-1} of rank d^2 (d >= 2).
bool is_cuspidal(const Symbol& s);

/// The natural bijections between defect 0/1 symbols and defect-d
/// symbols: from defect 0 shift the top row by d, from defect 1 by d-1.
/// Target rank grows by floor((d/2)^2) resp. floor((d/2)^2).
Symbol defect_bijection(const Symbol& s, int target_defect);

/// Inverse of the above; source_defect must be 0 or 1.
Symbol defect_bijection_inverse(const Symbol& s, int source_defect);

/// sigma = sum (2k-i) y_i over the entries of the given representative,
/// written as one weakly increasing sequence y_eps <= ... <= y_{2k} with
/// eps = (defect+1) mod 2.  Depends on the representative.
long long sigma_value(const Symbol& s);

/// a = sum (2k-i)(y_i - y0_i) against the staircase 0,0,1,1,...;
/// shift-invariant.
long long a_value(const Symbol& s);

enum class Family : std::uint8_t {
  PhiPlus, PhiMinus, OmegaPlus, OmegaMinus, V0, V1, Vbar0
};

struct LabelSetSpec {
  Family family;
  long long rank = 0;
};

std::string family_name(Family f);

/// Membership: defect/parity condition, orderedness, rank.
bool family_contains(const LabelSetSpec& spec, const Symbol& s);

/// Equal row union and intersection at a common entry count.  Decorated
/// degenerate symbols are similar only to themselves.
bool similar(const Symbol& a, const Symbol& b);

/// All members of the family similar to s, canonically normalized and
/// sorted.  Degenerate symbols form classes of size one.
std::vector<Symbol> similarity_class(const Symbol& s, const LabelSetSpec& spec);

std::string to_string(const Symbol& s);

/// All normalized symbols of the family at its rank (entry sizes are
/// bounded by the rank, so the list is finite).
std::vector<Symbol> family_members(const LabelSetSpec& spec);

/// Defect-0 symbol of a bipartition at the minimal common row count.
Symbol bipartition_to_symbol(const Partition& top, const Partition& bottom);

/// Inverse: the bipartition encoded by a defect-0 symbol.
std::pair<Partition, Partition> symbol_to_bipartition(const Symbol& s);

}  // namespace chsym
