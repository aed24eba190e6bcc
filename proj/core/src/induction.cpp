#include "chsym/induction.hpp"

#include <algorithm>
#include <numeric>

#include "chsym/lr.hpp"
#include "chsym/springer.hpp"

namespace chsym {

namespace {

long long weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

using Bip = std::pair<Partition, Partition>;

Bip bip_of(const Symbol& s) { return symbol_to_bipartition(s); }

/// Orientations of a D-side label as bipartitions: one for degenerate
/// labels, two otherwise.
std::vector<Bip> d_lifts(const Symbol& s) {
  Bip b = bip_of(s.without_decoration());
  if (b.first == b.second) return {b};
  return {b, {b.second, b.first}};
}

}  // namespace

Symbol odot_pair(const Symbol& A, const Symbol& B) {
  if (symbol_defect(A.as_ordered()) != 0 || symbol_defect(B.as_ordered()) != 0)
    throw std::invalid_argument("odot_pair: defect-0 symbols required");
  return symbol_normalize(Symbol(odot(A.top(), B.top()), odot(A.bottom(), B.bottom())));
}

VirtualCharacter induce_product_b(const Symbol& A, const Symbol& B) {
  auto [a1, a2] = bip_of(A);
  auto [b1, b2] = bip_of(B);
  VirtualCharacter out;
  int n1 = static_cast<int>(weight(a1) + weight(b1));
  int n2 = static_cast<int>(weight(a2) + weight(b2));
  for (const Partition& x1 : partitions_of(n1)) {
    long long c1 = lr_coefficient(a1, b1, x1);
    if (c1 == 0) continue;
    for (const Partition& x2 : partitions_of(n2)) {
      long long c2 = lr_coefficient(a2, b2, x2);
      if (c2 == 0) continue;
      out.add(bipartition_to_symbol(x1, x2), c1 * c2);
    }
  }
  return out;
}

VirtualCharacter induce_product_d(const Symbol& A, const Symbol& B) {
  // A rank-0 factor makes the induction the identity on the other label.
  if (symbol_rank(A) == 0 || symbol_rank(B) == 0) {
    const Symbol& other = symbol_rank(A) == 0 ? B : A;
    VirtualCharacter out;
    Symbol norm = symbol_normalize(other.as_unordered());
    if (is_degenerate(norm) && symbol_rank(norm) >= 1 &&
        norm.decoration() == Decoration::None)
      out.add_unresolved(norm, 1);
    else
      out.add(norm, 1);
    return out;
  }
  std::vector<Bip> liftsA = d_lifts(A), liftsB = d_lifts(B);
  bool resolvable = liftsA.size() == 2 || liftsB.size() == 2;

  // Ordered coefficients of the induction to the full hyperoctahedral
  // group of the sum of all lift characters.
  std::map<Bip, long long> ordered;
  for (const Bip& la : liftsA)
    for (const Bip& lb : liftsB) {
      int n1 = static_cast<int>(weight(la.first) + weight(lb.first));
      int n2 = static_cast<int>(weight(la.second) + weight(lb.second));
      for (const Partition& x1 : partitions_of(n1)) {
        long long c1 = lr_coefficient(la.first, lb.first, x1);
        if (c1 == 0) continue;
        for (const Partition& x2 : partitions_of(n2)) {
          long long c2 = lr_coefficient(la.second, lb.second, x2);
          if (c2 == 0) continue;
          ordered[{x1, x2}] += c1 * c2;
        }
      }
    }

  VirtualCharacter out;
  for (const auto& [xs, coeff] : ordered) {
    if (xs.first > xs.second) continue;  // each unordered pair once
    Symbol label = bipartition_to_symbol(xs.first, xs.second).as_unordered();
    if (xs.first == xs.second) {
      if (resolvable) {
        if (coeff % 2 != 0)
          throw std::logic_error("induce_product_d: odd degenerate total");
        out.add(label.with_decoration(Decoration::Plus), coeff / 2);
        out.add(label.with_decoration(Decoration::Minus), coeff / 2);
      } else {
        out.add_unresolved(label, coeff);
      }
    } else {
      out.add(label, coeff);
    }
  }
  return out;
}

VirtualCharacter induce_product_mixed(const Symbol& A, const Symbol& B,
                                      bool first_is_d) {
  VirtualCharacter out;
  if (first_is_d) {
    for (const Bip& la : d_lifts(A)) {
      Symbol liftA = bipartition_to_symbol(la.first, la.second);
      out.add_all(induce_product_b(liftA, B.as_ordered()));
    }
  } else {
    for (const Bip& lb : d_lifts(B)) {
      Symbol liftB = bipartition_to_symbol(lb.first, lb.second);
      out.add_all(induce_product_b(A.as_ordered(), liftB));
    }
  }
  return out;
}

VirtualCharacter induce_d_in_b(const Symbol& lam) {
  if (symbol_defect(lam.as_ordered()) != 0)
    throw std::invalid_argument("induce_d_in_b: defect-0 label required");
  VirtualCharacter out;
  Symbol ordered = lam.as_ordered();
  out.add(ordered, 1);
  if (!is_degenerate(lam)) out.add(ordered.swapped(), 1);
  return out;
}

VirtualCharacter induce_h(const Symbol& A, const Symbol& B, HReading reading) {
  auto [a1, a2] = bip_of(A);
  auto [b1, b2] = bip_of(B);
  if (a1 == a2 || b1 == b2)
    throw std::invalid_argument("induce_h: degenerate label rejected");

  VirtualCharacter out;
  int n = static_cast<int>(weight(a1) + weight(a2) + weight(b1) + weight(b2));
  bool delta_ab = weight(a1) + weight(b1) == weight(a2) + weight(b2);

  auto coeff = [&](const Partition& x1, const Partition& x2) -> long long {
    if (reading == HReading::Mixed) {
      return lr_coefficient(a1, b1, x1) * lr_coefficient(a2, b2, x2) +
             lr_coefficient(a2, b2, x1) * lr_coefficient(a1, b1, x2);
    }
    long long base = lr_coefficient(a1, a2, x1) * lr_coefficient(b1, b2, x2);
    return delta_ab ? 2 * base : base;
  };

  for (int n1 = 0; n1 <= n; ++n1) {
    for (const Partition& x1 : partitions_of(n1))
      for (const Partition& x2 : partitions_of(n - n1)) {
        Bip key{x1, x2};
        if (key.first > key.second) continue;
        long long e = coeff(x1, x2);
        if (e == 0) continue;
        Symbol label = bipartition_to_symbol(x1, x2).as_unordered();
        if (x1 == x2) {
          if (e % 2 != 0) {
            // only reachable under the printed reading, which the oracle
            // refutes; keep the total comparable instead of failing
            out.add_unresolved(label, e);
          } else {
            out.add(label.with_decoration(Decoration::Plus), e / 2);
            out.add(label.with_decoration(Decoration::Minus), e / 2);
          }
        } else {
          out.add(label, e);
        }
      }
  }
  return out;
}

namespace {

// Degenerate labels of positive rank split; the rank-0 pair does not.
bool splitting_degenerate(const Symbol& s) {
  Symbol n = symbol_normalize(s);
  return is_degenerate(n) && symbol_rank(n) >= 1;
}

bool invariant_under(const Symbol& s, bool twisted) {
  // The graph twist permutes the decorated copies of a degenerate label
  // and fixes everything else.
  return !twisted || !splitting_degenerate(s);
}

}  // namespace

DMinimalResult d_minimal(const Symbol& A, const Symbol& B,
                         const GroupContext& ctx) {
  DMinimalResult res;

  enum class Shape { ProdB, MixedDB, ProdD, CasesD } shape = Shape::ProdB;
  bool twisted = ctx.twist != TwistKind::Identity;

  if (ctx.t != 0 || ctx.type == GroupType::B) {
    if (twisted)
      throw std::invalid_argument("d_minimal: only the identity twist applies here");
    shape = Shape::ProdB;
  } else if (ctx.type == GroupType::C) {
    switch (ctx.twist) {
      case TwistKind::Identity: shape = Shape::MixedDB; break;
      case TwistKind::GammaAxId:
        if (!invariant_under(A, true))
          throw std::invalid_argument("d_minimal: label not twist-invariant");
        shape = Shape::MixedDB;
        break;
      default:
        throw std::invalid_argument("d_minimal: unsupported twist for type C");
    }
  } else {  // type D, t = 0
    switch (ctx.twist) {
      case TwistKind::Identity:
      case TwistKind::GammaAxGammaB:
        if (ctx.twist == TwistKind::GammaAxGammaB &&
            (!invariant_under(A, true) || !invariant_under(B, true)))
          throw std::invalid_argument("d_minimal: label not twist-invariant");
        shape = Shape::ProdD;
        break;
      case TwistKind::GammaN:
      case TwistKind::GammaAxId:
      case TwistKind::IdxGammaB: {
        // Under the longest-element identification the graph twist acts on
        // the factor selected by the parity of a.
        bool twist_on_first = ctx.a % 2 == 1;
        if (ctx.twist == TwistKind::GammaAxId && !twist_on_first)
          throw std::invalid_argument("d_minimal: twist side conflicts with parity of a");
        if (ctx.twist == TwistKind::IdxGammaB && twist_on_first)
          throw std::invalid_argument("d_minimal: twist side conflicts with parity of a");
        if (!invariant_under(twist_on_first ? A : B, true))
          throw std::invalid_argument("d_minimal: label not twist-invariant");
        shape = Shape::CasesD;
        break;
      }
    }
  }

  // Closed-form candidates.
  Symbol A1(A.top(), A.bottom());  // stored orientation, ordered view
  Symbol B1(B.top(), B.bottom());
  Symbol lam = odot_pair(A1, B1);
  Symbol lam_swapA = odot_pair(A1.swapped(), B1);
  std::vector<Symbol> cands;
  switch (shape) {
    case Shape::ProdB:
      cands = {lam};
      break;
    case Shape::MixedDB:
      cands = is_degenerate(symbol_normalize(A)) && ctx.twist == TwistKind::Identity
                  ? std::vector<Symbol>{lam}
                  : std::vector<Symbol>{lam, lam_swapA};
      break;
    case Shape::ProdD:
    case Shape::CasesD: {
      bool bothDeg = splitting_degenerate(A) && splitting_degenerate(B);
      if (shape == Shape::ProdD && ctx.twist == TwistKind::Identity && bothDeg)
        cands = {lam};
      else
        cands = {lam, lam_swapA};
      if (shape == Shape::CasesD && is_degenerate(lam) && is_degenerate(lam_swapA))
        throw std::invalid_argument(
            "d_minimal: twisted type D needs a non-degenerate candidate");
      break;
    }
  }
  bool unordered_out = shape == Shape::ProdD || shape == Shape::CasesD;
  if (unordered_out)
    for (Symbol& s : cands) s = symbol_normalize(s.as_unordered());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  // Refine by the b-value after the Springer embedding: the d-minimal
  // labels are the minimizers among the closed-form candidates.
  long long best = 0;
  std::vector<Symbol> kept;
  for (size_t i = 0; i < cands.size(); ++i) {
    long long bv = b_delta(cands[i], ctx);
    if (i == 0 || bv < best) { best = bv; kept.clear(); }
    if (bv == best) kept.push_back(cands[i]);
  }

  // Decorations for degenerate minimizers in type D.  A rank-0 factor
  // makes the induction the identity, so the input decoration survives.
  bool zeroA = symbol_rank(A) == 0, zeroB = symbol_rank(B) == 0;
  res.candidates.clear();
  for (const Symbol& s : kept) {
    if (unordered_out && splitting_degenerate(s)) {
      if (zeroA || zeroB) {
        Decoration known = zeroA ? B.decoration() : A.decoration();
        if (known != Decoration::None) {
          res.candidates.push_back(s.with_decoration(known));
        } else {
          res.unresolved_split = true;
          res.candidates.push_back(s);
        }
      } else if (splitting_degenerate(A) && splitting_degenerate(B)) {
        res.unresolved_split = true;
        res.candidates.push_back(s);
      } else {
        res.candidates.push_back(s.with_decoration(Decoration::Plus));
        res.candidates.push_back(s.with_decoration(Decoration::Minus));
      }
    } else {
      res.candidates.push_back(s);
    }
  }
  res.multiplicity = 1;
  res.sign_known = shape != Shape::CasesD;

  if (!twisted) {
    DMinimalResult::Certificate cert;
    switch (shape) {
      case Shape::ProdB: cert.induced = induce_product_b(A1, B1); break;
      case Shape::MixedDB: cert.induced = induce_product_mixed(A, B1, true); break;
      case Shape::ProdD: cert.induced = induce_product_d(A, B); break;
      case Shape::CasesD: break;  // unreachable: CasesD is twisted
    }
    long long minb = 0;
    bool first = true;
    auto consider = [&](const Symbol& label) {
      long long bv = b_delta(label.without_decoration(), ctx);
      cert.b_values[symbol_normalize(label)] = bv;
      if (first || bv < minb) { minb = bv; first = false; }
    };
    for (const auto& [label, mult] : cert.induced.terms()) consider(label);
    for (const auto& [label, mult] : cert.induced.unresolved_terms()) consider(label);
    cert.min_b = minb;

    // argmin set must equal the candidate set, each with multiplicity 1
    std::vector<Symbol> argmin;
    bool mult_ok = true;
    for (const auto& [label, mult] : cert.induced.terms())
      if (cert.b_values[label] == minb) {
        argmin.push_back(label);
        if (mult != 1) mult_ok = false;
      }
    for (const auto& [label, mult] : cert.induced.unresolved_terms())
      if (cert.b_values[label] == minb) {
        argmin.push_back(label);
        if (mult != 1) mult_ok = false;  // one of the pair carries the 1
      }
    std::sort(argmin.begin(), argmin.end());
    std::vector<Symbol> expect;
    for (const Symbol& s : res.candidates) {
      Symbol base = res.unresolved_split ? s : s;
      expect.push_back(symbol_normalize(res.unresolved_split
                                            ? base.without_decoration()
                                            : base));
    }
    // decorated pairs in candidates correspond to both halves in the terms
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    argmin.erase(std::unique(argmin.begin(), argmin.end()), argmin.end());
    cert.confirmed = mult_ok && argmin == expect;
    res.certificate = std::move(cert);
  }
  return res;
}

}  // namespace chsym
