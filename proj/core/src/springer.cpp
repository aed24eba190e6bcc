#include "chsym/springer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chsym {

namespace {

bool strictly_increasing_no_consecutive(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] < 2) return false;
  return true;
}

long long entry_sum(const SpringerSymbol& s) {
  return std::accumulate(s.top().begin(), s.top().end(), 0LL) +
         std::accumulate(s.bottom().begin(), s.bottom().end(), 0LL);
}

}  // namespace

SpringerSymbol::SpringerSymbol(SpringerKind kind, std::vector<int> top,
                               std::vector<int> bottom)
    : kind_(kind), top_(std::move(top)), bottom_(std::move(bottom)) {
  std::sort(top_.begin(), top_.end());
  std::sort(bottom_.begin(), bottom_.end());
  if (kind_ == SpringerKind::X) {
    bool swap = top_.size() < bottom_.size() ||
                (top_.size() == bottom_.size() && top_ < bottom_);
    if (swap) std::swap(top_, bottom_);
  }
  // Full validation lives in validate_springer; constructors reject only
  // structural impossibilities so internal maps can build values directly.
  if (!top_.empty() && top_.front() < 0)
    throw std::invalid_argument("springer symbol: negative entry");
  if (!bottom_.empty() && bottom_.front() < (kind_ == SpringerKind::Y ? 1 : 0))
    throw std::invalid_argument(kind_ == SpringerKind::Y
                                    ? "springer symbol: kind Y bottom row excludes 0"
                                    : "springer symbol: negative entry");
  if (!strictly_increasing_no_consecutive(top_) ||
      !strictly_increasing_no_consecutive(bottom_))
    throw std::invalid_argument(
        "springer symbol: rows admit no equal or consecutive entries");
  if (kind_ == SpringerKind::Y && (top_.size() + bottom_.size()) % 2 == 0)
    throw std::invalid_argument("springer symbol: kind Y needs odd entry count");
}

long long springer_rank(const SpringerSymbol& s) {
  long long sum = entry_sum(s);
  long long cnt = static_cast<long long>(s.top().size() + s.bottom().size());
  if (s.kind() == SpringerKind::Y) return 2 * (sum - cnt * (cnt - 1) / 2);
  return 2 * sum - cnt * (cnt - 2);
}

int springer_defect(const SpringerSymbol& s) {
  return static_cast<int>(s.top().size()) - static_cast<int>(s.bottom().size());
}

SpringerSymbol validate_springer(SpringerKind kind, std::vector<int> top,
                                 std::vector<int> bottom, long long expected_rank) {
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  auto check_row = [](const std::vector<int>& row, const char* name, int least) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i] < least)
        throw std::invalid_argument(std::string("condition violated: ") + name +
                                    " row entry below " + std::to_string(least));
      if (i > 0 && row[i] == row[i - 1])
        throw std::invalid_argument(std::string("condition violated: duplicate entry in ") + name + " row");
      if (i > 0 && row[i] == row[i - 1] + 1)
        throw std::invalid_argument(
            std::string("condition violated: consecutive integers in ") + name + " row");
    }
  };
  check_row(top, "top", 0);
  check_row(bottom, "bottom", kind == SpringerKind::Y ? 1 : 0);
  if (kind == SpringerKind::Y && (top.size() + bottom.size()) % 2 == 0)
    throw std::invalid_argument("condition violated: |X|+|Y| must be odd");
  SpringerSymbol s(kind, std::move(top), std::move(bottom));
  long long n = springer_rank(s);
  if (n < 0)
    throw std::invalid_argument("condition violated: negative rank");
  if (kind == SpringerKind::Y && n % 2 != 0)
    throw std::invalid_argument("condition violated: kind Y rank must be even");
  if (expected_rank >= 0 && n != expected_rank)
    throw std::invalid_argument("condition violated: entry sum does not match rank " +
                                std::to_string(expected_rank));
  return s;
}

SpringerSymbol springer_shift(const SpringerSymbol& s, int k) {
  if (k < 0) throw std::invalid_argument("shift amount must be >= 0");
  std::vector<int> t, b;
  if (s.kind() == SpringerKind::Y) {
    for (int i = 0; i < k; ++i) t.push_back(2 * i);
    for (int i = 0; i < k; ++i) b.push_back(2 * i + 1);
  } else {
    for (int i = 0; i < k; ++i) t.push_back(2 * i);
    for (int i = 0; i < k; ++i) b.push_back(2 * i);
  }
  for (int x : s.top()) t.push_back(x + 2 * k);
  for (int x : s.bottom()) b.push_back(x + 2 * k);
  return SpringerSymbol(s.kind(), std::move(t), std::move(b));
}

SpringerSymbol springer_normalize(const SpringerSymbol& s) {
  std::vector<int> t = s.top(), b = s.bottom();
  auto has = [](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  auto drop = [](std::vector<int>& v, int x) {
    v.erase(std::find(v.begin(), v.end(), x));
    for (int& e : v) e -= 2;
  };
  if (s.kind() == SpringerKind::Y) {
    while (has(t, 0) && has(b, 1)) { drop(t, 0); drop(b, 1); }
  } else {
    while (has(t, 0) && has(b, 0)) { drop(t, 0); drop(b, 0); }
  }
  return SpringerSymbol(s.kind(), std::move(t), std::move(b));
}

bool springer_equivalent(const SpringerSymbol& a, const SpringerSymbol& b) {
  return springer_normalize(a) == springer_normalize(b);
}

SpringerSymbol pi_bijection(const SpringerSymbol& s, int d) {
  if (springer_defect(s) != 1)
    throw std::invalid_argument("pi_bijection: source must have defect 1");
  if (s.kind() == SpringerKind::Y) {
    if (d % 2 == 0)
      throw std::invalid_argument("pi_bijection: kind Y needs odd d");
  } else if (d < 1) {
    throw std::invalid_argument("pi_bijection: kind X needs d >= 1");
  }
  if (d == 1) return s;
  if (d >= 1) {
    std::vector<int> t;
    for (int x = 0; x <= 2 * d - 4; x += 2) t.push_back(x);
    for (int x : s.top()) t.push_back(x + 2 * d - 2);
    return SpringerSymbol(s.kind(), std::move(t), s.bottom());
  }
  std::vector<int> b;
  for (int x = 1; x <= 1 - 2 * d; x += 2) b.push_back(x);
  for (int x : s.bottom()) b.push_back(x + 2 - 2 * d);
  return SpringerSymbol(s.kind(), s.top(), std::move(b));
}

SpringerSymbol pi_inverse(const SpringerSymbol& s) {
  int d = springer_defect(s);
  if (s.kind() == SpringerKind::X && d < 1)
    throw std::invalid_argument("pi_inverse: kind X needs defect >= 1");
  if (d == 1) return s;
  if (d > 1) {
    std::vector<int> t = s.top();
    for (int i = 0; i < d - 1; ++i) {
      if (i >= static_cast<int>(t.size()) || t[static_cast<size_t>(i)] != 2 * i)
        throw std::invalid_argument("pi_inverse: missing staircase prefix");
    }
    t.erase(t.begin(), t.begin() + (d - 1));
    for (int& x : t) x -= 2 * d - 2;
    return SpringerSymbol(s.kind(), std::move(t), s.bottom());
  }
  // kind Y, d <= -1
  std::vector<int> b = s.bottom();
  for (int i = 0; i < 1 - d; ++i) {
    if (i >= static_cast<int>(b.size()) || b[static_cast<size_t>(i)] != 2 * i + 1)
      throw std::invalid_argument("pi_inverse: missing staircase prefix");
  }
  b.erase(b.begin(), b.begin() + (1 - d));
  for (int& x : b) x -= 2 - 2 * d;
  return SpringerSymbol(s.kind(), s.top(), std::move(b));
}

SpringerSymbol theta_map(const Symbol& defect0, ThetaVariant variant) {
  if (symbol_defect(defect0) != 0)
    throw std::invalid_argument("theta_map: defect-0 symbol required");
  Symbol src = variant == ThetaVariant::ThetaT ? defect0.as_ordered().swapped()
                                               : defect0;
  const auto& a = src.top().entries();
  const auto& b = src.bottom().entries();
  const int s = static_cast<int>(a.size());
  std::vector<int> X{0}, Xp, Y, Yp;
  for (int i = 1; i <= s; ++i) {
    X.push_back(a[static_cast<size_t>(i - 1)] + i + 1);
    Xp.push_back(a[static_cast<size_t>(i - 1)] + i - 1);
    Y.push_back(b[static_cast<size_t>(i - 1)] + i);
    Yp.push_back(b[static_cast<size_t>(i - 1)] + i - 1);
  }
  switch (variant) {
    case ThetaVariant::Theta:
    case ThetaVariant::ThetaT:
      return SpringerSymbol(SpringerKind::Y, std::move(X), std::move(Y));
    case ThetaVariant::ThetaPrime:
      return SpringerSymbol(SpringerKind::X, std::move(X), std::move(Yp));
    case ThetaVariant::ThetaBar:
      return SpringerSymbol(SpringerKind::X, std::move(Xp), std::move(Yp));
  }
  throw std::logic_error("theta_map: unreachable");
}

Symbol theta_inverse(const SpringerSymbol& s, ThetaVariant variant) {
  auto strip = [](const std::vector<int>& row, int offset0) {
    // inverse of x -> x + (i-1) + offset0 with 1-based i
    std::vector<int> out;
    for (size_t i = 0; i < row.size(); ++i)
      out.push_back(row[i] - static_cast<int>(i) - offset0);
    return out;
  };
  std::vector<int> a, b;
  switch (variant) {
    case ThetaVariant::Theta:
    case ThetaVariant::ThetaT: {
      if (s.kind() != SpringerKind::Y || s.top().empty() || s.top().front() != 0)
        throw std::invalid_argument("theta_inverse: not in the image");
      std::vector<int> xs(s.top().begin() + 1, s.top().end());
      a = strip(xs, 2);
      b = strip(s.bottom(), 1);
      break;
    }
    case ThetaVariant::ThetaPrime: {
      if (s.kind() != SpringerKind::X || s.top().empty() || s.top().front() != 0)
        throw std::invalid_argument("theta_inverse: not in the image");
      std::vector<int> xs(s.top().begin() + 1, s.top().end());
      a = strip(xs, 2);
      b = strip(s.bottom(), 0);
      break;
    }
    case ThetaVariant::ThetaBar: {
      if (s.kind() != SpringerKind::X)
        throw std::invalid_argument("theta_inverse: kind X required");
      a = strip(s.top(), 0);
      b = strip(s.bottom(), 0);
      break;
    }
  }
  Symbol out(BetaSet(std::move(a)), BetaSet(std::move(b)),
             /*ordered=*/variant != ThetaVariant::ThetaBar);
  if (variant == ThetaVariant::ThetaT) out = out.swapped();
  return out;
}

SpringerSymbol delta_map(const Symbol& defect0, const GroupContext& ctx) {
  Symbol lam = defect0.without_decoration().as_ordered();
  if (symbol_defect(lam) != 0)
    throw std::invalid_argument("delta_map: defect-0 symbol required");
  switch (ctx.type) {
    case GroupType::B:
      return pi_bijection(theta_map(lam, ThetaVariant::ThetaPrime), 2 * ctx.t + 1);
    case GroupType::C:
      if (ctx.c_plus)
        return pi_bijection(theta_map(lam, ThetaVariant::Theta), 4 * ctx.t + 1);
      if (ctx.t < 1)
        throw std::invalid_argument("delta_map: type C with d = 1-4t needs t >= 1");
      return pi_bijection(theta_map(lam, ThetaVariant::ThetaT), 1 - 4 * ctx.t);
    case GroupType::D:
      if (ctx.t == 0) return theta_map(lam, ThetaVariant::ThetaBar);
      return pi_bijection(theta_map(lam, ThetaVariant::ThetaPrime), 4 * ctx.t);
  }
  throw std::logic_error("delta_map: unreachable");
}

namespace {

std::vector<int> merged(const SpringerSymbol& s) {
  std::vector<int> all = s.top();
  all.insert(all.end(), s.bottom().begin(), s.bottom().end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

long long sigma_springer(const SpringerSymbol& s) {
  std::vector<int> x = merged(s);
  long long n = static_cast<long long>(x.size());
  long long acc = 0;
  for (size_t j = 0; j < x.size(); ++j)
    acc += (n - 1 - static_cast<long long>(j)) * x[j];
  return acc;
}

long long b_value(const SpringerSymbol& s) {
  std::vector<int> x = merged(s);
  long long n = static_cast<long long>(x.size());
  long long acc = 0;
  for (size_t j = 0; j < x.size(); ++j) {
    long long ref = s.kind() == SpringerKind::Y ? static_cast<long long>(j)
                                                : 2 * (static_cast<long long>(j) / 2);
    acc += (n - 1 - static_cast<long long>(j)) * (x[j] - ref);
  }
  return acc;
}

long long b_delta(const Symbol& defect0, const GroupContext& ctx) {
  return b_value(delta_map(defect0, ctx));
}

bool springer_similar(const SpringerSymbol& a, const SpringerSymbol& b) {
  if (a.kind() != b.kind()) return false;
  if (springer_rank(a) != springer_rank(b)) return false;
  int ta = static_cast<int>(a.top().size() + a.bottom().size());
  int tb = static_cast<int>(b.top().size() + b.bottom().size());
  if ((ta - tb) % 2 != 0) return false;
  SpringerSymbol ra = ta < tb ? springer_shift(a, (tb - ta) / 2) : a;
  SpringerSymbol rb = tb < ta ? springer_shift(b, (ta - tb) / 2) : b;
  auto profile = [](const SpringerSymbol& s) {
    std::vector<int> uni, inter;
    std::set_union(s.top().begin(), s.top().end(), s.bottom().begin(),
                   s.bottom().end(), std::back_inserter(uni));
    std::set_intersection(s.top().begin(), s.top().end(), s.bottom().begin(),
                          s.bottom().end(), std::back_inserter(inter));
    return std::make_pair(uni, inter);
  };
  return profile(ra) == profile(rb);
}

bool springer_degenerate(const SpringerSymbol& s) {
  return s.kind() == SpringerKind::X && s.top() == s.bottom();
}

bool same_unipotent_class(const SpringerSymbol& a, const SpringerSymbol& b) {
  if (springer_degenerate(a) || springer_degenerate(b))
    throw std::invalid_argument("same_unipotent_class: degenerate symbol");
  if (a.kind() != b.kind() || springer_rank(a) != springer_rank(b))
    throw std::invalid_argument("same_unipotent_class: kind/rank mismatch");
  return springer_similar(a, b);
}

ClassDimension class_dimension(const SpringerSymbol& s, const GroupContext& ctx) {
  long long want = ctx.type == GroupType::B ? 2LL * ctx.n + 1 : 2LL * ctx.n;
  SpringerKind want_kind =
      ctx.type == GroupType::C ? SpringerKind::Y : SpringerKind::X;
  if (springer_rank(s) != want || s.kind() != want_kind)
    throw std::invalid_argument("class_dimension: symbol does not match context");
  ClassDimension out;
  out.dim_springer_fibre = b_value(s);
  out.dim_orbit = root_count(ctx.type, ctx.n) - 2 * out.dim_springer_fibre;
  return out;
}

std::string to_string(const SpringerSymbol& s) {
  auto row = [](const std::vector<int>& v) {
    std::string r;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) r += ",";
      r += std::to_string(v[i]);
    }
    return r;
  };
  return std::string(s.kind() == SpringerKind::Y ? "Y" : "X") + "[" +
         row(s.top()) + "|" + row(s.bottom()) + "]";
}

std::vector<SpringerSymbol> springer_symbols_up_to(SpringerKind kind,
                                                   long long max_rank) {
  // Reduced symbols only; entries are bounded by the rank budget since the
  // weighted entry sums grow at least as fast as the entries.
  std::vector<SpringerSymbol> out;
  int emax = static_cast<int>(max_rank) + 4;
  std::vector<std::vector<int>> rows_by_size[2];  // 0: least entry 0, 1: least 1
  for (int least = 0; least <= 1; ++least) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      all.push_back(cur);
      for (int e = next; e <= emax; ++e) {
        cur.push_back(e);
        self(self, e + 2);
        cur.pop_back();
      }
    };
    rec(rec, least);
    rows_by_size[least] = std::move(all);
  }
  for (const auto& t : rows_by_size[0]) {
    int bleast = kind == SpringerKind::Y ? 1 : 0;
    for (const auto& b : rows_by_size[bleast]) {
      if (kind == SpringerKind::Y && (t.size() + b.size()) % 2 == 0) continue;
      SpringerSymbol s(kind, t, b);
      if (kind == SpringerKind::X && s.top() != t) continue;  // canonical order only
      long long n = springer_rank(s);
      if (n < 0 || n > max_rank) continue;
      if (kind == SpringerKind::Y && n % 2 != 0) continue;
      if (springer_normalize(s) != s) continue;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace chsym
