#include "chsym/sheaf.hpp"

#include <algorithm>

namespace chsym {

namespace {

int first_defect(const GroupContext& ctx) {
  switch (ctx.type) {
    case GroupType::B: return 2 * ctx.t + 1;
    case GroupType::C:
    case GroupType::D: return 4 * ctx.t;
  }
  return 0;
}

int second_defect(const GroupContext& ctx) {
  switch (ctx.type) {
    case GroupType::B: return 2 * ctx.t + 1;
    case GroupType::C: return ctx.c_plus ? 4 * ctx.t + 1 : 4 * ctx.t - 1;
    case GroupType::D: return 4 * ctx.t;
  }
  return 0;
}

bool identity_embedding(const GroupContext& ctx) {
  return ctx.t == 0 && (ctx.type == GroupType::C || ctx.type == GroupType::D);
}

/// Cuspidal symbol with the given defect: ({0..d-1}; empty).
Symbol cuspidal_of_defect(int d) {
  std::vector<int> top(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) top[static_cast<size_t>(i)] = i;
  return Symbol(BetaSet(std::move(top)), BetaSet());
}

}  // namespace

LabelSetSpec omega_side_spec(const GroupContext& ctx) {
  Family f = ctx.type == GroupType::B ? Family::PhiPlus : Family::OmegaPlus;
  return {f, ctx.a};
}

LabelSetSpec phi_side_spec(const GroupContext& ctx) {
  Family f = ctx.type == GroupType::D ? Family::OmegaPlus : Family::PhiPlus;
  return {f, ctx.b};
}

std::pair<Symbol, Symbol> phi_embed(const Symbol& first, const Symbol& second,
                                    const GroupContext& ctx) {
  if (identity_embedding(ctx)) return {first, second};
  auto raise = [](const Symbol& s, int target, bool unordered) {
    Symbol src = s.without_decoration().as_ordered();
    int d = symbol_defect(src);
    if (d != 0 && d != 1)
      throw std::invalid_argument("phi_embed: label must have defect 0 or 1");
    Symbol out = defect_bijection(src, target);
    return unordered ? out.as_unordered() : out;
  };
  bool unord = ctx.type != GroupType::B;
  return {raise(first, first_defect(ctx), unord),
          raise(second, second_defect(ctx), ctx.type == GroupType::D)};
}

std::pair<Symbol, Symbol> phi_inverse(const Symbol& lambda, const Symbol& xi,
                                      const GroupContext& ctx) {
  if (identity_embedding(ctx)) return {lambda, xi};
  auto lower = [](const Symbol& s, int expect) {
    Symbol src = s.without_decoration().as_ordered();
    if (symbol_defect(src) != expect)
      throw std::invalid_argument("phi_inverse: defect does not match context");
    return defect_bijection_inverse(src, 1);
  };
  return {lower(lambda, first_defect(ctx)), lower(xi, second_defect(ctx))};
}

QValue char_value(const Symbol& lambda, const Symbol& xi,
                  const GroupContext& ctx) {
  SymbolPair pair;
  try {
    pair = make_pair(lambda, xi, ctx.type);
  } catch (const PairError& e) {
    if (e.kind == PairError::Kind::EpsilonTooLarge) return QValue{};
    throw;
  }
  EqualityConditions conds = equality_conditions(pair);
  SpringerSymbol sum;
  if (conds.cond1) {
    sum = oplus(pair);
  } else if (conds.cond2.has_value() && *conds.cond2) {
    sum = boxplus(pair);
  } else {
    return QValue{};
  }
  long long b = b_value(sum);
  long long m = m_value(sum, ctx);
  if (m % 2 != 0) throw std::logic_error("char_value: odd semisimple rank");
  long long n = symbol_rank(lambda) + symbol_rank(xi);
  int eps = 1;
  if (ctx.type == GroupType::D && ctx.twist == TwistKind::GammaN &&
      symbol_defect(lambda) == 0 && symbol_defect(xi) == 0)
    eps = -1;
  QValue out;
  out.sign = eps * (n % 2 == 0 ? 1 : -1);
  out.q_exponent = b + m / 2;
  return out;
}

std::vector<Symbol> decrement_labels(const Symbol& s) {
  Symbol norm = symbol_normalize(s.without_decoration());
  std::vector<Symbol> out;
  auto emit = [&](BetaSet top, BetaSet bottom) {
    Symbol cand(std::move(top), std::move(bottom), s.ordered());
    cand = symbol_normalize(cand);
    if (!s.ordered() && is_degenerate(cand)) {
      out.push_back(cand.with_decoration(Decoration::Plus));
      out.push_back(cand.with_decoration(Decoration::Minus));
    } else {
      out.push_back(cand);
    }
  };
  for (int row = 0; row < 2; ++row) {
    const BetaSet& target = row == 0 ? norm.top() : norm.bottom();
    const BetaSet& other = row == 0 ? norm.bottom() : norm.top();
    for (int i = 0; i < target.size(); ++i) {
      int e = target[i];
      if (e == 0 || target.contains(e - 1)) continue;
      std::vector<int> entries = target.entries();
      entries[static_cast<size_t>(i)] = e - 1;
      if (row == 0) emit(BetaSet(std::move(entries)), other);
      else emit(other, BetaSet(std::move(entries)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Symbol, Symbol>> restrict_labels(const Symbol& lambda,
                                                       const Symbol& xi,
                                                       RestrictSide side) {
  std::vector<std::pair<Symbol, Symbol>> out;
  if (side == RestrictSide::First) {
    for (const Symbol& s : decrement_labels(lambda)) out.emplace_back(s, xi);
  } else {
    for (const Symbol& s : decrement_labels(xi)) out.emplace_back(lambda, s);
  }
  return out;
}

XiFamily xi_family(const GroupContext& ctx, XiSideMode mode) {
  if (ctx.type != GroupType::B && ctx.t < 1)
    throw std::invalid_argument("xi_family: types C/D need t >= 1");
  // The small defect-1 labels of ranks 2,2,2,2,2,1,1.
  const std::vector<Symbol> small = {
      Symbol(BetaSet({2}), BetaSet()),
      Symbol(BetaSet({1, 2}), BetaSet({0})),
      Symbol(BetaSet({0, 1}), BetaSet({2})),
      Symbol(BetaSet({0, 1, 2}), BetaSet({1, 2})),
      Symbol(BetaSet({0, 2}), BetaSet({1})),
      Symbol(BetaSet({1}), BetaSet()),
      Symbol(BetaSet({0, 1}), BetaSet({1})),
  };
  bool vary_first = mode == XiSideMode::BPrimeZero;
  int vary_defect = vary_first ? first_defect(ctx) : second_defect(ctx);
  int fixed_defect = vary_first ? second_defect(ctx) : first_defect(ctx);

  XiFamily fam;
  fam.fixed_cuspidal = cuspidal_of_defect(fixed_defect);
  fam.varying_cuspidal =
      defect_bijection(Symbol(BetaSet({0}), BetaSet()), vary_defect);
  auto pair_sum = [&](const Symbol& varying) {
    Symbol first = vary_first ? varying : fam.fixed_cuspidal;
    Symbol second = vary_first ? fam.fixed_cuspidal : varying;
    return oplus(make_pair(first, second, ctx.type));
  };
  fam.sums.push_back(pair_sum(fam.varying_cuspidal));
  for (const Symbol& s : small) {
    Symbol embedded = defect_bijection(s, vary_defect);
    fam.xi.push_back(embedded);
    fam.sums.push_back(pair_sum(embedded));
  }
  long long b1 = b_value(fam.sums[1]), b2 = b_value(fam.sums[2]);
  long long b3 = b_value(fam.sums[3]), b4 = b_value(fam.sums[4]);
  long long b6 = b_value(fam.sums[6]), b7 = b_value(fam.sums[7]);
  fam.inequalities_hold = b1 < b2 && b3 < b4 && b6 < b7;
  return fam;
}

MagnitudeResult multiplicity_magnitude(const Symbol& lambda, const Symbol& xi,
                                       const Symbol& lambda1, const Symbol& xi1,
                                       const GroupContext& ctx) {
  // (lambda1, xi1) must have the defect-(0 or 1) profile of the subset
  // parameterising irreducible characters.
  int d1 = std::abs(symbol_defect(lambda1));
  int d2 = std::abs(symbol_defect(xi1));
  bool ok;
  switch (ctx.type) {
    case GroupType::B: ok = d1 == 1 && d2 == 1; break;
    case GroupType::C: ok = d1 == 0 && d2 == 1; break;
    case GroupType::D: ok = d1 == 0 && d2 == 0; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument(
        "multiplicity_magnitude: second pair outside the character profile");
  MagnitudeResult out;
  if (!similar(lambda, lambda1) || !similar(xi, xi1)) return out;  // 0
  auto sizeV = similarity_class(lambda, omega_side_spec(ctx)).size();
  auto sizeW = similarity_class(xi, phi_side_spec(ctx)).size();
  out.num = 1;
  out.den = static_cast<long long>(sizeV) * static_cast<long long>(sizeW);
  return out;
}

std::optional<int> cuspidal_scalar(int ell) {
  if (ell < 2) return std::nullopt;
  long long pw = 1LL << std::min(ell, 62);
  std::optional<int> found;
  for (int zeta : {1, -1}) {
    if ((zeta + pw - 1) % 4 == 0) {
      if (found) throw std::logic_error("cuspidal_scalar: non-unique sign");
      found = zeta;
    }
  }
  return found;
}

}  // namespace chsym
