#include "chsym/pairing.hpp"

#include <algorithm>
#include <set>

namespace chsym {

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::B: return "B";
    case PairCase::C1: return "C.1";
    case PairCase::C2: return "C.2";
    case PairCase::D: return "D";
  }
  return "?";
}

int epsilon(const Symbol& lambda, const Symbol& xi) {
  return std::abs(std::abs(symbol_defect(lambda)) - std::abs(symbol_defect(xi)));
}

SymbolPair make_pair(const Symbol& lambda, const Symbol& xi, GroupType type,
                     int min_p) {
  int dl = std::abs(symbol_defect(lambda));
  int dx = std::abs(symbol_defect(xi));
  PairCase pcase;
  int t;
  switch (type) {
    case GroupType::B:
      if (dl % 2 == 0 || dx % 2 == 0)
        throw PairError(PairError::Kind::FamilyMismatch,
                        "type B pairs have odd defects");
      if (dl != dx)
        throw PairError(PairError::Kind::EpsilonTooLarge,
                        "defect difference exceeds 1");
      pcase = PairCase::B;
      t = (dl - 1) / 2;
      break;
    case GroupType::C:
      if (dl % 4 != 0 || dx % 2 == 0)
        throw PairError(PairError::Kind::FamilyMismatch,
                        "type C pairs have defects (0 mod 4, odd)");
      if (dx == dl + 1) { pcase = PairCase::C1; t = dl / 4; }
      else if (dx == dl - 1) { pcase = PairCase::C2; t = dl / 4; }
      else throw PairError(PairError::Kind::EpsilonTooLarge,
                           "defect difference exceeds 1");
      break;
    case GroupType::D:
      if (dl % 4 != 0 || dx % 4 != 0)
        throw PairError(PairError::Kind::FamilyMismatch,
                        "type D pairs have defects divisible by 4");
      if (dl != dx)
        throw PairError(PairError::Kind::EpsilonTooLarge,
                        "defect difference exceeds 1");
      pcase = PairCase::D;
      t = dl / 4;
      break;
    default:
      throw PairError(PairError::Kind::FamilyMismatch, "unknown type");
  }

  // Align the bottom rows to a common size.
  Symbol nl = symbol_normalize(lambda);
  Symbol nx = symbol_normalize(xi);
  int p = std::max({nl.bottom().size(), nx.bottom().size(), min_p});
  Symbol al = symbol_shift(nl, p - nl.bottom().size());
  Symbol ax = symbol_shift(nx, p - nx.bottom().size());

  SymbolPair pair;
  pair.type = type;
  pair.pcase = pcase;
  pair.t = t;
  pair.p = p;
  pair.lambda = al.without_decoration().as_ordered();
  pair.xi = ax.without_decoration().as_ordered();
  pair.lambda_decoration = lambda.decoration();
  pair.xi_decoration = xi.decoration();
  return pair;
}

SymbolPair zero_aligned(const SymbolPair& pair) {
  auto rows_have_zero = [](const Symbol& s) {
    return s.top().contains(0) && s.bottom().contains(0);
  };
  if (rows_have_zero(pair.lambda) && rows_have_zero(pair.xi)) return pair;
  SymbolPair out = pair;
  out.p = pair.p + 1;
  out.lambda = symbol_shift(pair.lambda, 1);
  out.xi = symbol_shift(pair.xi, 1);
  return zero_aligned(out);
}

namespace {

std::vector<int> row_sum_shifted(const BetaSet& x, int skip_x, const BetaSet& y,
                                 int skip_y, int offset) {
  // pairs x[skip_x + i] with y[skip_y + i]
  int count = x.size() - skip_x;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(x[skip_x + i] + y[skip_y + i] + offset);
  return out;
}

}  // namespace

SpringerSymbol oplus(const SymbolPair& pair) {
  const BetaSet &A = pair.lambda.top(), &B = pair.lambda.bottom();
  const BetaSet &A2 = pair.xi.top(), &B2 = pair.xi.bottom();
  SpringerSymbol out;
  switch (pair.pcase) {
    case PairCase::B:
    case PairCase::D: {
      out = SpringerSymbol(SpringerKind::X, row_sum_shifted(A, 0, A2, 0, 0),
                           row_sum_shifted(B, 0, B2, 0, 0));
      break;
    }
    case PairCase::C1: {
      // xi's top carries the extra leading entry a'_0
      std::vector<int> top = row_sum_shifted(A, 0, A2, 1, 1);
      top.push_back(A2[0]);
      out = SpringerSymbol(SpringerKind::Y, std::move(top),
                           row_sum_shifted(B, 0, B2, 0, 1));
      break;
    }
    case PairCase::C2: {
      // lambda's top carries the extra leading entry a_0, which is dropped;
      // the drop respects shift classes only when a_0 = 0
      if (A[0] != 0) return oplus(zero_aligned(pair));
      out = SpringerSymbol(SpringerKind::Y, row_sum_shifted(B, 0, B2, 0, 0),
                           row_sum_shifted(A, 1, A2, 0, 0));
      break;
    }
  }
  long long n = symbol_rank(pair.lambda) + symbol_rank(pair.xi);
  long long want = pair.type == GroupType::B ? 2 * n + 1 : 2 * n;
  if (springer_rank(out) != want)
    throw std::logic_error("oplus: rank bookkeeping failed");
  return out;
}

SpringerSymbol boxplus(const SymbolPair& pair) {
  if (pair.t != 0 || (pair.pcase != PairCase::C1 && pair.pcase != PairCase::D))
    throw std::invalid_argument("boxplus: defined for cases C.1 and D with t = 0");
  SymbolPair flipped = pair;
  flipped.lambda = pair.lambda.swapped();
  return oplus(flipped);
}

EqualityConditions equality_conditions(const SymbolPair& raw) {
  SymbolPair pair = zero_aligned(raw);
  EqualityConditions out;
  long long asum = a_value(pair.lambda) + a_value(pair.xi);
  out.cond1 = asum == b_value(oplus(pair));
  // The crossed sum is a genuine second alternative only when the row
  // exchange changes it, i.e. when no factor it touches is degenerate.
  bool has_box = pair.t == 0 &&
                 (pair.pcase == PairCase::C1 || pair.pcase == PairCase::D) &&
                 !is_degenerate(symbol_normalize(pair.lambda)) &&
                 (pair.pcase == PairCase::C1 ||
                  !is_degenerate(symbol_normalize(pair.xi)));
  if (has_box) out.cond2 = asum == b_value(boxplus(pair));

  // a_i = b_i or a'_i = b'_i for 1 <= i <= p, indices skipping the lone
  // leading entry of the larger-defect symbol
  int skip_a = pair.pcase == PairCase::C2 ? 1 : 0;
  int skip_a2 = pair.pcase == PairCase::C1 ? 1 : 0;
  out.cond3 = true;
  for (int i = 0; i < pair.p; ++i) {
    bool first = pair.lambda.top()[skip_a + i] == pair.lambda.bottom()[i];
    bool second = pair.xi.top()[skip_a2 + i] == pair.xi.bottom()[i];
    if (!first && !second) { out.cond3 = false; break; }
  }
  return out;
}

bool interleaving_condition(const SymbolPair& raw) {
  SymbolPair pair = zero_aligned(raw);
  int skip_a = pair.pcase == PairCase::C2 ? 1 : 0;
  int skip_a2 = pair.pcase == PairCase::C1 ? 1 : 0;
  const BetaSet &A = pair.lambda.top(), &B = pair.lambda.bottom();
  const BetaSet &A2 = pair.xi.top(), &B2 = pair.xi.bottom();
  int rows = A.size() - skip_a;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < pair.p; ++j) {
      int ai = A[skip_a + i], bj = B[j];
      int ai2 = A2[skip_a2 + i], bj2 = B2[j];
      bool le = ai <= bj && ai2 <= bj2;
      bool ge = ai >= bj && ai2 >= bj2;
      if (!le && !ge) return false;
    }
  return true;
}

IntervalStructure interval_structure(const SymbolPair& raw) {
  SymbolPair pair = zero_aligned(raw);
  IntervalStructure out;
  auto merged = [](const Symbol& s) {
    std::vector<int> all = s.top().entries();
    all.insert(all.end(), s.bottom().entries().begin(), s.bottom().entries().end());
    std::sort(all.begin(), all.end());
    return all;
  };
  out.c = merged(pair.lambda);
  out.d = merged(pair.xi);
  // The index set L drops the index-0 entry of the longer sequence.
  if (pair.pcase == PairCase::C1) out.d.erase(out.d.begin());
  if (pair.pcase == PairCase::C2) out.c.erase(out.c.begin());
  if (out.c.size() != out.d.size())
    throw std::logic_error("interval_structure: sequence lengths disagree");
  out.index_origin = 1;

  int L = static_cast<int>(out.c.size());
  auto linked = [&](int i) {  // i and i+1, 1-based
    return out.c[static_cast<size_t>(i - 1)] == out.c[static_cast<size_t>(i)] ||
           out.d[static_cast<size_t>(i - 1)] == out.d[static_cast<size_t>(i)];
  };
  int start = 1;
  for (int i = 1; i <= L; ++i) {
    if (i == L || !linked(i)) {
      IntervalStructure::Interval iv;
      iv.first = start;
      iv.last = i;
      iv.degenerate = iv.size() == 2 &&
                      out.c[static_cast<size_t>(iv.first - 1)] ==
                          out.c[static_cast<size_t>(iv.last - 1)] &&
                      out.d[static_cast<size_t>(iv.first - 1)] ==
                          out.d[static_cast<size_t>(iv.last - 1)];
      out.classes.push_back(iv);
      start = i + 1;
    }
  }
  for (const auto& iv : out.classes)
    (iv.degenerate ? out.num_degenerate : out.num_nondegenerate) += 1;
  out.i0 = 0;
  for (size_t ci = 0; ci < out.classes.size(); ++ci) {
    const auto& iv = out.classes[ci];
    bool odd = iv.size() % 2 == 1;
    bool in_tilde = odd;
    if (pair.pcase == PairCase::C2 && static_cast<int>(ci) == out.i0) {
      // The first class absorbs the lone zero of the first-factor sequence
      // (its twin sits at the dropped index 0), which inverts the effect a
      // flip has on that factor's row sizes: the class constrains the
      // defects exactly when its cardinality is even.
      in_tilde = !odd;
    }
    if (in_tilde) out.tilde.push_back(static_cast<int>(ci));
  }
  if (pair.type != GroupType::B && out.tilde.size() % 2 != 0)
    throw std::logic_error("interval_structure: odd tilde count");
  return out;
}

namespace {

Symbol oriented_symbol(std::vector<int> top, std::vector<int> bottom,
                       bool unordered) {
  Symbol s(BetaSet(std::move(top)), BetaSet(std::move(bottom)));
  return symbol_normalize(unordered ? s.as_unordered() : s);
}

}  // namespace

JSetResult enumerate_jset(const SymbolPair& base) {
  JSetResult res;
  res.intervals = interval_structure(base);
  const IntervalStructure& st = res.intervals;
  res.ell = st.num_nondegenerate;
  int exponent = base.type == GroupType::B ? res.ell - 1 : res.ell - 2;
  res.within_formula_hypotheses =
      exponent >= 0 &&
      (base.type == GroupType::B ||
       (!st.tilde.empty() && st.tilde.size() % 2 == 0));
  res.formula_size = exponent >= 0 ? 1LL << exponent : 0;

  bool lambda_unordered = base.type != GroupType::B;
  bool xi_unordered = base.type == GroupType::D;
  Decoration lam_dec = base.lambda_decoration != Decoration::None
                           ? base.lambda_decoration
                           : (is_degenerate(symbol_normalize(base.lambda))
                                  ? Decoration::Plus
                                  : Decoration::None);
  Decoration xi_dec = base.xi_decoration != Decoration::None
                          ? base.xi_decoration
                          : (is_degenerate(symbol_normalize(base.xi))
                                 ? Decoration::Plus
                                 : Decoration::None);

  std::set<std::pair<Symbol, Symbol>> members;
  int nclasses = static_cast<int>(st.classes.size());
  for (unsigned mask = 0; mask < (1u << nclasses); ++mask) {
    if (base.type != GroupType::B) {
      int ones = 0;
      for (int ti : st.tilde)
        if (mask >> ti & 1) ++ones;
      if (ones % 2 != 0) continue;
    }
    ++res.admitted_functions;
    std::set<int> S{0}, T{0}, S2{0}, T2{0};
    for (int ci = 0; ci < nclasses; ++ci) {
      bool fval = mask >> ci & 1;
      for (int i = st.classes[static_cast<size_t>(ci)].first;
           i <= st.classes[static_cast<size_t>(ci)].last; ++i) {
        bool to_S = (i % 2 == 1) != fval;  // odd index, f=0  or  even, f=1
        (to_S ? S : T).insert(st.c[static_cast<size_t>(i - 1)]);
        (to_S ? S2 : T2).insert(st.d[static_cast<size_t>(i - 1)]);
      }
    }
    auto vec = [](const std::set<int>& s) { return std::vector<int>(s.begin(), s.end()); };
    std::vector<int> s1 = vec(S), t1 = vec(T), s2 = vec(S2), t2 = vec(T2);
    if (base.type != GroupType::D && s2.size() < t2.size()) {
      std::swap(s1, t1);
      std::swap(s2, t2);
    }
    Symbol first = oriented_symbol(s1, t1, lambda_unordered);
    Symbol second = oriented_symbol(s2, t2, xi_unordered);
    if (is_degenerate(first)) {
      if (lam_dec == Decoration::None)
        throw std::logic_error("enumerate_jset: unexpected degenerate member");
      first = first.with_decoration(lam_dec);
    }
    if (is_degenerate(second)) {
      if (xi_dec == Decoration::None)
        throw std::logic_error("enumerate_jset: unexpected degenerate member");
      second = second.with_decoration(xi_dec);
    }
    members.emplace(std::move(first), std::move(second));
  }
  res.members.assign(members.begin(), members.end());
  if (res.within_formula_hypotheses &&
      static_cast<long long>(res.members.size()) != res.formula_size)
    throw std::logic_error("enumerate_jset: size disagrees with 2^(l-1)/2^(l-2)");
  return res;
}

bool j_membership(const Symbol& lambda, const Symbol& xi, GroupType type) {
  SymbolPair pair;
  try {
    pair = make_pair(lambda, xi, type);
  } catch (const PairError& e) {
    if (e.kind == PairError::Kind::EpsilonTooLarge) return false;
    throw;
  }
  EqualityConditions conds = equality_conditions(pair);
  if (conds.cond1) return true;
  return conds.cond2.has_value() && *conds.cond2;
}

}  // namespace chsym
