#pragma once

/*
  context.hpp

  Ambient-group data for the classical types B/C/D: rank n, the split
  (a,b) cut out by an involution, the relative split (a',b') inside the
  block Levi, the block parameter t, and the Frobenius twist.  The block
  Levi carrying a cuspidal object has semisimple rank

      B: 2t(t+1)     C: 2t(4t+1) or 2t(4t-1)     D: 8t^2

  and the attached defects are 2t+1, 4t+1 / 1-4t, 4t.
*/

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chsym {

class SpringerSymbol;

enum class GroupType : std::uint8_t { B, C, D };

enum class TwistKind : std::uint8_t {
  Identity, GammaAxId, IdxGammaB, GammaAxGammaB, GammaN
};

std::string to_string(GroupType t);
std::string to_string(TwistKind t);

/// 2t(t+1) (B), 2t(4t±1) (C, sign by c_plus), 8t^2 (D).
long long levi_semisimple_rank(GroupType type, int t, bool c_plus = true);

/// 2t+1 (B), 4t+1 or 1-4t (C), 4t (D).
int block_defect(GroupType type, int t, bool c_plus = true);

/// Number of roots: 2n^2 for B/C, 2n(n-1) for D.
long long root_count(GroupType type, int n);

struct GroupContext {
  GroupType type = GroupType::B;
  int n = 0;
  int a = 0, b = 0;    // split, a+b = n
  int a1 = 0, b1 = 0;  // relative split inside the block Levi, a1+b1 = m
  int t = 0;
  bool c_plus = true;  // type C block: d = 4t+1 (true) or 4t-1 (false)
  TwistKind twist = TwistKind::Identity;

  int m() const { return a1 + b1; }
  void validate() const;

  /// Context from (type, t, a1, b1): n and the split are forced by the
  /// Table-1 arithmetic (a = a1 + block rank of the first factor, etc.).
  static GroupContext from_relative(GroupType type, int t, int a1, int b1,
                                    bool c_plus = true,
                                    TwistKind twist = TwistKind::Identity);
};

/// Rank added to the first/second factor by the block Levi:
/// B: t(t+1)/t(t+1);  C: 4t^2 / 4t^2±2t;  D: 4t^2/4t^2.
long long block_rank_first(GroupType type, int t, bool c_plus = true);
long long block_rank_second(GroupType type, int t, bool c_plus = true);

/// Semisimple rank of the Levi attached to a Springer symbol, read from
/// its defect (B: d = 2t+1; C: d = ±(4t±1) with d = 1 mod 4; D: d = 4t).
/// Throws for defects outside the legal block family.  Always even.
long long m_value(const SpringerSymbol& s, const GroupContext& ctx);

}  // namespace chsym
