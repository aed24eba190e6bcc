#include "chsym/beta_set.hpp"

#include <algorithm>
#include <numeric>

namespace chsym {

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      throw std::invalid_argument("beta-set entry must be non-negative");
    if (i > 0 && entries_[i] == entries_[i - 1])
      throw std::invalid_argument("beta-set entries must be distinct: " +
                                  std::to_string(entries_[i]));
  }
}

bool BetaSet::contains(int x) const {
  return std::binary_search(entries_.begin(), entries_.end(), x);
}

long long beta_rank(const BetaSet& b) {
  long long sum = std::accumulate(b.entries().begin(), b.entries().end(), 0LL);
  long long s = b.size();
  return sum - s * (s - 1) / 2;
}

BetaSet beta_shift(const BetaSet& b, int k) {
  if (k < 0) throw std::invalid_argument("shift amount must be >= 0");
  std::vector<int> out;
  out.reserve(b.entries().size() + static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(i);
  for (int x : b.entries()) out.push_back(x + k);
  return BetaSet(std::move(out));
}

BetaSet beta_normalize(const BetaSet& b) {
  // Un-shift while the set starts with 0: drop it and subtract 1.
  std::vector<int> cur = b.entries();
  while (!cur.empty() && cur.front() == 0) {
    cur.erase(cur.begin());
    for (int& x : cur) --x;
  }
  return BetaSet(std::move(cur));
}

bool beta_equivalent(const BetaSet& a, const BetaSet& b) {
  return beta_normalize(a) == beta_normalize(b);
}

int beta_shift_depth(const BetaSet& b) {
  int k = 0;
  const auto& e = b.entries();
  while (k < static_cast<int>(e.size()) && e[static_cast<size_t>(k)] == k) ++k;
  return k;
}

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition beta_to_partition(const BetaSet& b) {
  const int s = b.size();
  Partition parts;
  for (int i = s - 1; i >= 0; --i) {
    int part = b[i] - i;
    if (part > 0) parts.push_back(part);
  }
  // Entries below their index would mean a negative part; they can only be
  // the padding entries 0,1,...,i which contribute nothing.
  for (size_t i = 0; i < parts.size(); ++i)
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::logic_error("beta_to_partition: non-monotone output");
  return parts;
}

BetaSet partition_to_beta(const Partition& p, int rows) {
  if (!is_valid_partition(p))
    throw std::invalid_argument("invalid partition");
  if (rows < static_cast<int>(p.size()))
    throw std::invalid_argument("partition_to_beta: rows < number of parts");
  std::vector<int> out(static_cast<size_t>(rows));
  // lambda_{s-i+1} + (i-1) with 1-based i; missing parts are zero.
  for (int i = 1; i <= rows; ++i) {
    int idx = rows - i;  // 0-based index into p, largest part first
    int part = idx < static_cast<int>(p.size()) ? p[static_cast<size_t>(idx)] : 0;
    out[static_cast<size_t>(i - 1)] = part + (i - 1);
  }
  return BetaSet(std::move(out));
}

namespace {

std::pair<BetaSet, BetaSet> to_common_size(const BetaSet& a, const BetaSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa == sb) return {a, b};
  if (sa < sb) return {beta_shift(a, sb - sa), b};
  return {a, beta_shift(b, sa - sb)};
}

}  // namespace

bool dominance_leq(const BetaSet& a, const BetaSet& b) {
  if (beta_rank(a) != beta_rank(b))
    throw std::invalid_argument("dominance order needs equal ranks");
  auto [x, y] = to_common_size(a, b);
  long long sx = 0, sy = 0;
  for (int i = x.size() - 1; i >= 0; --i) {
    sx += x[i];
    sy += y[i];
    if (sx > sy) return false;
  }
  return true;
}

BetaSet odot(const BetaSet& a, const BetaSet& b) {
  auto [x, y] = to_common_size(a, b);
  std::vector<int> out(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i)
    out[static_cast<size_t>(i)] = x[i] + y[i] - i;
  return BetaSet(std::move(out));
}

std::string to_string(const BetaSet& b) {
  std::string s = "{";
  for (size_t i = 0; i < b.entries().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.entries()[i]);
  }
  return s + "}";
}

std::vector<BetaSet> beta_sets_of_rank(long long rank, int rows) {
  std::vector<BetaSet> out;
  for (const Partition& p : partitions_of(static_cast<int>(rank)))
    if (static_cast<int>(p.size()) <= rows)
      out.push_back(partition_to_beta(p, rows));
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  Partition cur;
  // Decreasing-part backtracking.
  auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, maxPart); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

}  // namespace chsym
