#pragma once

/*
  induction.hpp

  Symbol-level induction of characters between the classical Weyl groups
  and their maximal-rank reflection subgroups, written multiplicatively in
  Littlewood-Richardson coefficients, together with the computation of
  d-minimal characters (the labels of unipotent supports).

  Inputs are defect-0 symbols: ordered for B-side factors, unordered and
  possibly decorated for D-side factors.  Outputs are virtual characters
  over the ambient group's labels.
*/

#include <optional>
#include <vector>

#include "chsym/context.hpp"
#include "chsym/virtual_character.hpp"

namespace chsym {

/// (A1.B1 ; A2.B2) with . the entrywise beta-set sum; rows padded pairwise.
Symbol odot_pair(const Symbol& A, const Symbol& B);

/// W_a x W_b <= W_n: sum of c_{A1B1}^{X1} c_{A2B2}^{X2} (X1;X2).
VirtualCharacter induce_product_b(const Symbol& A, const Symbol& B);

/// W_a' x W_b' <= W_n': the four-way lift sum; degenerate targets split
/// into equal halves when A or B is non-degenerate, and are reported as
/// an unresolved pair otherwise.
VirtualCharacter induce_product_d(const Symbol& A, const Symbol& B);

/// W_a' x W_b <= W_n (first_is_d) or W_a x W_b' <= W_n.
VirtualCharacter induce_product_mixed(const Symbol& A, const Symbol& B,
                                      bool first_is_d);

/// W_n' <= W_n: (A1;A2) + (A2;A1), collapsing for degenerate labels.
VirtualCharacter induce_d_in_b(const Symbol& lam);

/// The two readings of the twisted-subgroup coefficient formula
///   (W_a' x W_b')<s_n t_0>  <=  W_n'.
/// Mixed: c_{A_{j1}B_{j1}}^{X1} c_{A_{j2}B_{j2}}^{X2} + (j1 <-> j2),
/// the second term vanishing unless rk A1+rk B1 = rk A2+rk B2.
/// Printed: c_{A_{j1}A_{j2}}^{X1} c_{B_{j1}B_{j2}}^{X2} scaled by
/// (1 + delta_{A.B}), as displayed.  The two disagree; the group oracle
/// arbitrates for Mixed, which is the default everywhere.
enum class HReading : std::uint8_t { Mixed, Printed };

/// E is the restriction of (A1;A2) x (B1;B2), taken up to simultaneous
/// row swap; rejects degenerate labels (A1 = A2 or B1 = B2).
VirtualCharacter induce_h(const Symbol& A, const Symbol& B,
                          HReading reading = HReading::Mixed);

struct DMinimalResult {
  /// b^d-minimizing labels, decorated where the case resolves decorations.
  std::vector<Symbol> candidates;
  /// Degenerate minimizer whose +/- assignment the combinatorics leaves
  /// open (both input factors degenerate); candidates then holds the
  /// undecorated base.
  bool unresolved_split = false;
  long long multiplicity = 1;
  /// Twisted type-D case: the multiplicity is a sign depending on the
  /// choice of extensions; unresolved here.
  bool sign_known = true;

  /// Untwisted contexts: the full induced character with the b^d value of
  /// every constituent, for brute-force confirmation.
  struct Certificate {
    VirtualCharacter induced;
    std::map<Symbol, long long> b_values;  // per constituent label
    long long min_b = 0;
    bool confirmed = false;  // argmin set == candidates, multiplicity 1
  };
  std::optional<Certificate> certificate;
};

/// The d-minimal constituents of the induction of E = A x B for the
/// context's group/twist case.  E must be invariant under the declared
/// twist.  For untwisted contexts a certificate is attached.
DMinimalResult d_minimal(const Symbol& A, const Symbol& B,
                         const GroupContext& ctx);

}  // namespace chsym
