#include "chsym/context.hpp"

#include "chsym/springer.hpp"

namespace chsym {

std::string to_string(GroupType t) {
  switch (t) {
    case GroupType::B: return "B";
    case GroupType::C: return "C";
    case GroupType::D: return "D";
  }
  return "?";
}

std::string to_string(TwistKind t) {
  switch (t) {
    case TwistKind::Identity: return "identity";
    case TwistKind::GammaAxId: return "gamma_a x id";
    case TwistKind::IdxGammaB: return "id x gamma_b";
    case TwistKind::GammaAxGammaB: return "gamma_a x gamma_b";
    case TwistKind::GammaN: return "gamma_n";
  }
  return "?";
}

long long levi_semisimple_rank(GroupType type, int t, bool c_plus) {
  long long tt = t;
  switch (type) {
    case GroupType::B: return 2 * tt * (tt + 1);
    case GroupType::C: return 2 * tt * (4 * tt + (c_plus ? 1 : -1));
    case GroupType::D: return 8 * tt * tt;
  }
  return 0;
}

int block_defect(GroupType type, int t, bool c_plus) {
  switch (type) {
    case GroupType::B: return 2 * t + 1;
    case GroupType::C: return c_plus ? 4 * t + 1 : 1 - 4 * t;
    case GroupType::D: return 4 * t;
  }
  return 0;
}

long long root_count(GroupType type, int n) {
  long long nn = n;
  return type == GroupType::D ? 2 * nn * (nn - 1) : 2 * nn * nn;
}

long long block_rank_first(GroupType type, int t, bool /*c_plus*/) {
  long long tt = t;
  switch (type) {
    case GroupType::B: return tt * (tt + 1);
    case GroupType::C: return 4 * tt * tt;
    case GroupType::D: return 4 * tt * tt;
  }
  return 0;
}

long long block_rank_second(GroupType type, int t, bool c_plus) {
  long long tt = t;
  switch (type) {
    case GroupType::B: return tt * (tt + 1);
    case GroupType::C: return 4 * tt * tt + (c_plus ? 2 * tt : -2 * tt);
    case GroupType::D: return 4 * tt * tt;
  }
  return 0;
}

void GroupContext::validate() const {
  if (n <= 0) throw std::invalid_argument("context: rank n must be positive");
  if (a < 0 || b < 0 || a + b != n)
    throw std::invalid_argument("context: split must satisfy a+b = n");
  if ((type == GroupType::C || type == GroupType::D) && a == 1)
    throw std::invalid_argument("context: a = 1 is not allowed in types C/D");
  if (t < 0) throw std::invalid_argument("context: t must be >= 0");
  long long m = n - levi_semisimple_rank(type, t, c_plus);
  if (m < 0 || a1 + b1 != m)
    throw std::invalid_argument("context: a'+b' must equal n - (block rank)");
  if (a1 > a || b1 > b)
    throw std::invalid_argument("context: a' <= a and b' <= b required");
}

GroupContext GroupContext::from_relative(GroupType type, int t, int a1, int b1,
                                         bool c_plus, TwistKind twist) {
  GroupContext ctx;
  ctx.type = type;
  ctx.t = t;
  ctx.c_plus = c_plus;
  ctx.twist = twist;
  ctx.a1 = a1;
  ctx.b1 = b1;
  ctx.a = a1 + static_cast<int>(block_rank_first(type, t, c_plus));
  ctx.b = b1 + static_cast<int>(block_rank_second(type, t, c_plus));
  ctx.n = ctx.a + ctx.b;
  ctx.validate();
  return ctx;
}

long long m_value(const SpringerSymbol& s, const GroupContext& ctx) {
  int d = springer_defect(s);
  switch (ctx.type) {
    case GroupType::B: {
      if (s.kind() != SpringerKind::X || d < 1 || d % 2 == 0)
        throw std::invalid_argument("m_value: type B needs an odd-defect X-symbol");
      int t = (d - 1) / 2;
      return levi_semisimple_rank(GroupType::B, t);
    }
    case GroupType::C: {
      if (s.kind() != SpringerKind::Y)
        throw std::invalid_argument("m_value: type C needs a Y-symbol");
      // legal block defects are = 1 mod 4 (4t+1 and 1-4t)
      if (((d % 4) + 4) % 4 != 1)
        throw std::invalid_argument("m_value: illegal defect for type C");
      if (d >= 1) return levi_semisimple_rank(GroupType::C, (d - 1) / 4, true);
      return levi_semisimple_rank(GroupType::C, (1 - d) / 4, false);
    }
    case GroupType::D: {
      if (s.kind() != SpringerKind::X || d % 4 != 0)
        throw std::invalid_argument("m_value: type D needs a defect-0-mod-4 X-symbol");
      return levi_semisimple_rank(GroupType::D, d / 4);
    }
  }
  throw std::logic_error("m_value: unreachable");
}

}  // namespace chsym
