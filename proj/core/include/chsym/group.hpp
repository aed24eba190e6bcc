#pragma once

/*
  group.hpp

  Brute-force ground truth.  The hyperoctahedral group W_n is realized as
  signed permutations of {1..n}; W_n' is the kernel of the product-of-signs
  character.  Everything is enumerated explicitly for n <= 5: elements,
  conjugacy classes by orbit partition, characters as exact rational class
  functions, Frobenius induction from the maximal-rank reflection
  subgroups, and the comparison sweeps against the symbol-level formulas.

  Irreducible characters of W_n are built by inducing
  (chi_lambda lifted) x (chi_mu lifted, twisted by the product of signs)
  from W_a x W_b; symmetric-group character values come from the
  Murnaghan-Nakayama recursion.  Irreducibles of W_n' are restrictions,
  except that (lambda;lambda) splits into two halves; the halves are
  carved out of the explicit monomial module by a commutant projection,
  all in exact arithmetic.
*/

#include <boost/rational.hpp>
#include <functional>
#include <string>
#include <vector>

#include "chsym/induction.hpp"
#include "chsym/symbol.hpp"
#include "chsym/virtual_character.hpp"

namespace chsym {

using Rat = boost::rational<long long>;

struct SignedPerm {
  /// image[i] = s*(j+1): basis vector i maps to s * basis vector j.
  std::vector<std::int8_t> image;

  static SignedPerm identity(int n);
  int n() const { return static_cast<int>(image.size()); }
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

SignedPerm compose(const SignedPerm& f, const SignedPerm& g);  // f after g
SignedPerm inverse(const SignedPerm& f);
SignedPerm conjugate(const SignedPerm& g, const SignedPerm& x);  // g x g^-1

/// Cycle type of the underlying permutation.
Partition cycle_type(const SignedPerm& g);
/// Product of the entry signs (+1/-1); the linear character with kernel W_n'.
int sign_product(const SignedPerm& g);
/// Number of negative signs among coordinates [lo, hi).
int negatives_in(const SignedPerm& g, int lo, int hi);
/// The block [lo, hi) as a standalone signed permutation (must preserve it).
SignedPerm block_component(const SignedPerm& g, int lo, int hi);

enum class GroupKind : std::uint8_t { B, D };

class GroupData {
public:
  /// Cached full enumeration; 1 <= n <= 5.
  static const GroupData& get(int n, GroupKind kind);

  int n() const { return n_; }
  GroupKind kind() const { return kind_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  const SignedPerm& class_rep(int c) const { return class_reps_[static_cast<size_t>(c)]; }
  long long class_size(int c) const { return class_sizes_[static_cast<size_t>(c)]; }
  int class_of_index(int ei) const { return class_of_[static_cast<size_t>(ei)]; }
  int class_of(const SignedPerm& g) const;
  int element_index(const SignedPerm& g) const;  // -1 when absent
  bool contains(const SignedPerm& g) const { return element_index(g) >= 0; }

private:
  GroupData(int n, GroupKind kind);
  int n_;
  GroupKind kind_;
  std::vector<SignedPerm> elements_;
  std::vector<int> class_of_;
  std::vector<SignedPerm> class_reps_;
  std::vector<long long> class_sizes_;
};

class ClassFunction {
public:
  ClassFunction() = default;
  explicit ClassFunction(const GroupData* g)
      : group_(g), values_(static_cast<size_t>(g->num_classes()), Rat(0)) {}

  const GroupData* group() const { return group_; }
  Rat& operator[](int c) { return values_[static_cast<size_t>(c)]; }
  const Rat& at(int c) const { return values_[static_cast<size_t>(c)]; }
  Rat value_at(const SignedPerm& g) const { return values_[static_cast<size_t>(group_->class_of(g))]; }

  ClassFunction& operator+=(const ClassFunction& o);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
  const GroupData* group_ = nullptr;
  std::vector<Rat> values_;
};

Rat inner(const ClassFunction& f, const ClassFunction& g);

/// Symmetric group character value chi_lambda(mu) by border-strip removal.
long long mn_char(const Partition& lambda, const Partition& mu);

/// Irreducible character of W_n labelled by the bipartition (top;bottom):
/// induced from the lift of chi_top times the sign-twisted lift of
/// chi_bottom.  Cached.
const ClassFunction& wn_char(const Partition& top, const Partition& bottom,
                             const GroupData& g);

/// Ordered defect-0 symbols labelling Irr(W_n).
std::vector<Symbol> b_irr_labels(int n);
/// Unordered defect-0 symbols labelling Irr(W_n'), degenerates decorated.
std::vector<Symbol> d_irr_labels(int n);

/// Character of W_n' for a d_irr_label; halves of degenerate labels are
/// computed from the monomial module and assigned to +/- by the fixed
/// lexicographic convention.  Cached.
const ClassFunction& d_irr_char(const Symbol& label, int n);

enum class SubgroupShape : std::uint8_t {
  BxB_in_B, DxD_in_D, H_twisted, D_in_B, DxB_in_B, BxD_in_B
};

std::string to_string(SubgroupShape s);

/// Ambient group kind for the shape.
GroupKind ambient_kind(SubgroupShape s);

bool subgroup_contains(SubgroupShape shape, int a, int b, const SignedPerm& g);
long long subgroup_order(SubgroupShape shape, int a, int b, const GroupData& g);

/// Frobenius induction of an elementwise-defined subgroup class function.
ClassFunction induce_cf(SubgroupShape shape, int a, int b,
                        const std::function<Rat(const SignedPerm&)>& f,
                        const GroupData& g);

/// Decomposition into irreducibles of the ambient group; throws if any
/// multiplicity fails to be a non-negative integer.
std::map<Symbol, long long> decompose_b(const ClassFunction& f);
std::map<Symbol, long long> decompose_d(const ClassFunction& f);

struct VerifyMismatch {
  std::string label;
  std::string expected;  // oracle value
  std::string got;       // symbol-level value
};

struct VerifyReport {
  SubgroupShape shape;
  int a = 0, b = 0;
  std::vector<VerifyMismatch> mismatches;
  std::vector<std::string> notes;
  bool ok() const { return mismatches.empty(); }
};

/// For every label of the subgroup, compares the symbol-level induction
/// with the oracle decomposition.  For H_twisted the report records which
/// coefficient reading the oracle confirms.
VerifyReport verify_against_symbols(SubgroupShape shape, int a, int b,
                                    HReading reading = HReading::Mixed);

/// Twisted type-D multiplicity sign (case gamma_n): the coset inner
/// product of the induced extension with the chosen extension of the
/// d-minimal label, under this module's extension conventions.
long long twisted_d_coset_multiplicity(const Symbol& A, const Symbol& B,
                                       const Symbol& X, int a, int b);

}  // namespace chsym
