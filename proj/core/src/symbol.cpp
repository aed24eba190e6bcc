#include "chsym/symbol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace chsym {

Symbol::Symbol(BetaSet top, BetaSet bottom, bool ordered, Decoration dec)
    : top_(std::move(top)), bottom_(std::move(bottom)), ordered_(ordered), dec_(dec) {
  if (!ordered_) {
    bool swap = false;
    if (top_.size() < bottom_.size()) swap = true;
    else if (top_.size() == bottom_.size() && top_.entries() < bottom_.entries())
      swap = true;
    if (swap) std::swap(top_, bottom_);
  }
  if (dec_ != Decoration::None) {
    if (ordered_ || top_ != bottom_)
      throw std::invalid_argument(
          "decoration requires an unordered symbol with equal rows");
  }
}

Symbol Symbol::swapped() const { return Symbol(bottom_, top_, ordered_, dec_); }

Symbol Symbol::with_decoration(Decoration d) const {
  return Symbol(top_, bottom_, ordered_, d);
}

Symbol Symbol::without_decoration() const {
  return Symbol(top_, bottom_, ordered_, Decoration::None);
}

Symbol Symbol::as_unordered() const {
  return Symbol(top_, bottom_, /*ordered=*/false, dec_);
}

Symbol Symbol::as_ordered() const {
  return Symbol(top_, bottom_, /*ordered=*/true, Decoration::None);
}

int symbol_defect(const Symbol& s) { return s.top().size() - s.bottom().size(); }

long long symbol_rank(const Symbol& s) {
  long long d = symbol_defect(s);
  return beta_rank(s.top()) + beta_rank(s.bottom()) + (d * d) / 4;
}

Symbol symbol_shift(const Symbol& s, int k) {
  return Symbol(beta_shift(s.top(), k), beta_shift(s.bottom(), k), s.ordered(),
                s.decoration());
}

Symbol symbol_normalize(const Symbol& s) {
  std::vector<int> t = s.top().entries(), b = s.bottom().entries();
  while (!t.empty() && !b.empty() && t.front() == 0 && b.front() == 0) {
    t.erase(t.begin());
    b.erase(b.begin());
    for (int& x : t) --x;
    for (int& x : b) --x;
  }
  return Symbol(BetaSet(std::move(t)), BetaSet(std::move(b)), s.ordered(),
                s.decoration());
}

bool symbol_equivalent(const Symbol& a, const Symbol& b) {
  return symbol_normalize(a) == symbol_normalize(b);
}

bool symbol_class_less(const Symbol& a, const Symbol& b) {
  return symbol_normalize(a) < symbol_normalize(b);
}

bool is_degenerate(const Symbol& s) {
  return symbol_defect(s) == 0 && s.top() == s.bottom();
}

bool is_cuspidal(const Symbol& s) {
  Symbol n = symbol_normalize(s);
  // The bottom row of a one-row class reduces to empty exactly when the
  // normalized form has an empty bottom (a simultaneous shift cannot be
  // undone against an empty row).
  const BetaSet *one = nullptr, *other = nullptr;
  if (n.bottom().empty()) { one = &n.top(); other = &n.bottom(); }
  else if (n.top().empty()) { one = &n.bottom(); other = &n.top(); }
  else return false;
  (void)other;
  const auto& e = one->entries();
  if (e.size() < 3) return false;  // {0..2d} needs d>=1, {0..2d-1} needs d>=2
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != static_cast<int>(i)) return false;
  return true;
}

Symbol defect_bijection(const Symbol& s, int target_defect) {
  int d0 = symbol_defect(s);
  if (d0 != 0 && d0 != 1)
    throw std::invalid_argument("defect_bijection: source defect must be 0 or 1");
  if (target_defect < 0)
    throw std::invalid_argument("defect_bijection: target defect must be >= 0");
  int shift = d0 == 0 ? target_defect : target_defect - 1;
  if (shift < 0)
    throw std::invalid_argument("defect_bijection: defect-1 source needs d >= 1");
  return Symbol(beta_shift(s.top(), shift), s.bottom(), s.ordered(),
                Decoration::None);
}

Symbol defect_bijection_inverse(const Symbol& s, int source_defect) {
  if (source_defect != 0 && source_defect != 1)
    throw std::invalid_argument("defect_bijection_inverse: source defect 0 or 1");
  int d = symbol_defect(s);
  int shift = source_defect == 0 ? d : d - 1;
  if (shift < 0) throw std::invalid_argument("defect_bijection_inverse: bad defect");
  // Undo the top-row shift: top must begin with 0..shift-1.
  std::vector<int> t = s.top().entries();
  for (int i = 0; i < shift; ++i) {
    if (i >= static_cast<int>(t.size()) || t[static_cast<size_t>(i)] != i)
      throw std::invalid_argument(
          "defect_bijection_inverse: top row is not a shifted row");
  }
  t.erase(t.begin(), t.begin() + shift);
  for (int& x : t) x -= shift;
  return Symbol(BetaSet(std::move(t)), s.bottom(), s.ordered(), s.decoration());
}

namespace {

std::vector<int> merged_entries(const Symbol& s) {
  std::vector<int> all = s.top().entries();
  all.insert(all.end(), s.bottom().entries().begin(), s.bottom().entries().end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

long long sigma_value(const Symbol& s) {
  std::vector<int> y = merged_entries(s);
  long long n = static_cast<long long>(y.size());
  long long acc = 0;
  // weight of the i-th smallest entry (0-based j) is n-1-j = 2k-i.
  for (size_t j = 0; j < y.size(); ++j) acc += (n - 1 - static_cast<long long>(j)) * y[j];
  return acc;
}

long long a_value(const Symbol& s) {
  std::vector<int> y = merged_entries(s);
  long long n = static_cast<long long>(y.size());
  int eps = (symbol_defect(s) % 2 != 0) ? 0 : 1;
  long long acc = 0;
  for (size_t j = 0; j < y.size(); ++j) {
    // reference staircase 0,0,1,1,... (with a final k when eps = 0)
    long long i = static_cast<long long>(j) + eps;  // index in y_eps..y_{2k}
    long long ref = eps == 0 ? i / 2 : (i - 1) / 2;
    acc += (n - 1 - static_cast<long long>(j)) * (y[j] - ref);
  }
  return acc;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::PhiPlus: return "Phi+";
    case Family::PhiMinus: return "Phi-";
    case Family::OmegaPlus: return "Omega+";
    case Family::OmegaMinus: return "Omega-";
    case Family::V0: return "V0";
    case Family::V1: return "V1";
    case Family::Vbar0: return "Vbar0";
  }
  return "?";
}

bool family_contains(const LabelSetSpec& spec, const Symbol& s) {
  if (symbol_rank(s) != spec.rank) return false;
  int d = symbol_defect(s);
  switch (spec.family) {
    case Family::PhiPlus:
      return s.ordered() && d > 0 && d % 2 == 1;
    case Family::PhiMinus:
      if (!s.ordered()) return false;
      if (d == 0) return !is_degenerate(s);
      return d % 4 == 0;
    case Family::OmegaPlus:
      if (s.ordered()) return false;
      if (d == 0 && is_degenerate(s)) return s.decoration() != Decoration::None;
      return d % 4 == 0 && s.decoration() == Decoration::None;
    case Family::OmegaMinus:
      return !s.ordered() && d > 0 && d % 4 == 2 && s.decoration() == Decoration::None;
    case Family::V0:
      return s.ordered() && d == 0;
    case Family::V1:
      return s.ordered() && d == 1;
    case Family::Vbar0:
      if (s.ordered() || d != 0) return false;
      if (is_degenerate(s)) return s.decoration() != Decoration::None;
      return s.decoration() == Decoration::None;
  }
  return false;
}

namespace {

// (union, intersection) of the rows of a representative with the given
// total entry count.  Shifting adds one shared entry per row, so totals of
// the same parity are always reachable.
struct RowProfile {
  std::vector<int> uni, inter;
};

std::optional<RowProfile> profile_at_total(const Symbol& s, int total) {
  int have = s.top().size() + s.bottom().size();
  if ((total - have) % 2 != 0 || total < have) return std::nullopt;
  Symbol rep = symbol_shift(s, (total - have) / 2);
  RowProfile p;
  const auto& a = rep.top().entries();
  const auto& b = rep.bottom().entries();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(p.uni));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(p.inter));
  return p;
}

}  // namespace

bool similar(const Symbol& a, const Symbol& b) {
  if (a.decoration() != Decoration::None || b.decoration() != Decoration::None) {
    Symbol na = symbol_normalize(a), nb = symbol_normalize(b);
    return na == nb;  // decorated degenerates are similar only to themselves
  }
  if (symbol_rank(a) != symbol_rank(b)) return false;
  int ta = a.top().size() + a.bottom().size();
  int tb = b.top().size() + b.bottom().size();
  int total = std::max(ta, tb);
  if ((ta - tb) % 2 != 0) return false;
  auto pa = profile_at_total(a, total);
  auto pb = profile_at_total(b, total);
  if (!pa || !pb) return false;
  return pa->uni == pb->uni && pa->inter == pb->inter;
}

std::vector<Symbol> similarity_class(const Symbol& s, const LabelSetSpec& spec) {
  if (!family_contains(spec, s))
    throw std::invalid_argument("similarity_class: symbol not in " +
                                family_name(spec.family));
  if (is_degenerate(symbol_normalize(s)) && s.decoration() != Decoration::None)
    return {symbol_normalize(s)};

  Symbol n = symbol_normalize(s);
  auto prof = profile_at_total(n, n.top().size() + n.bottom().size());
  std::vector<int> free;
  std::set_difference(prof->uni.begin(), prof->uni.end(), prof->inter.begin(),
                      prof->inter.end(), std::back_inserter(free));

  bool unordered = !s.ordered();
  std::set<Symbol> out;
  const int f = static_cast<int>(free.size());
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<int> ta = prof->inter, tb = prof->inter;
    for (int i = 0; i < f; ++i)
      (mask >> i & 1 ? ta : tb).push_back(free[static_cast<size_t>(i)]);
    Symbol cand(BetaSet(std::move(ta)), BetaSet(std::move(tb)), !unordered
                ? true : false);
    if (unordered) cand = cand.as_unordered();
    if (!family_contains(spec, cand)) continue;
    out.insert(symbol_normalize(cand));
  }
  return std::vector<Symbol>(out.begin(), out.end());
}

std::string to_string(const Symbol& s) {
  auto row = [](const BetaSet& b) {
    std::string r;
    for (size_t i = 0; i < b.entries().size(); ++i) {
      if (i) r += ",";
      r += std::to_string(b.entries()[i]);
    }
    return r;
  };
  std::string out = "[" + row(s.top()) + "|" + row(s.bottom()) + "]";
  if (s.decoration() == Decoration::Plus) out += "+";
  if (s.decoration() == Decoration::Minus) out += "-";
  return out;
}

std::vector<Symbol> family_members(const LabelSetSpec& spec) {
  std::vector<Symbol> out;
  // Defects are bounded: floor((d/2)^2) <= rank.
  int dmax = 2;
  while (static_cast<long long>(dmax / 2) * (dmax / 2) <= spec.rank) ++dmax;
  bool unordered = spec.family == Family::OmegaPlus ||
                   spec.family == Family::OmegaMinus ||
                   spec.family == Family::Vbar0;
  int dlo = (spec.family == Family::PhiMinus) ? -dmax : 0;
  for (int d = dlo; d <= dmax; ++d) {
    long long rest = spec.rank - static_cast<long long>(d) * d / 4;
    if (rest < 0) continue;
    int top_rows_extra = d >= 0 ? d : 0;
    int bot_rows_extra = d >= 0 ? 0 : -d;
    // enough rows for any partition of `rest` split across the two rows
    int base = static_cast<int>(rest);
    for (long long rt = 0; rt <= rest; ++rt) {
      long long rb = rest - rt;
      for (const BetaSet& t0 : beta_sets_of_rank(rt, base + top_rows_extra))
        for (const BetaSet& b0 : beta_sets_of_rank(rb, base + bot_rows_extra)) {
          Symbol cand(t0, b0, /*ordered=*/true);
          if (symbol_defect(cand) != d) continue;
          Symbol norm = symbol_normalize(unordered ? cand.as_unordered() : cand);
          if (unordered && is_degenerate(norm)) {
            for (Decoration dec : {Decoration::Plus, Decoration::Minus}) {
              Symbol decd = norm.with_decoration(dec);
              if (family_contains(spec, decd)) out.push_back(decd);
            }
          } else if (family_contains(spec, norm)) {
            out.push_back(norm);
          }
        }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Symbol bipartition_to_symbol(const Partition& top, const Partition& bottom) {
  int rows = std::max(top.size(), bottom.size());
  return symbol_normalize(Symbol(partition_to_beta(top, rows),
                                 partition_to_beta(bottom, rows)));
}

std::pair<Partition, Partition> symbol_to_bipartition(const Symbol& s) {
  if (symbol_defect(s) != 0)
    throw std::invalid_argument("symbol_to_bipartition: defect must be 0");
  return {beta_to_partition(s.top()), beta_to_partition(s.bottom())};
}

}  // namespace chsym
