#include "chsym/lr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace chsym {

namespace {

long long weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

bool contains_shape(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

// Count semistandard fillings of nu/lambda with content mu whose reverse
// reading word (rows right to left, top to bottom) is a lattice word.
// Cells are visited in exactly that order, so the lattice condition is a
// prefix condition and the right/above neighbours are already placed.
struct LRCounter {
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<int>> grid;   // 0 = not yet placed / inside lambda
  std::vector<int> lam_row;             // lambda_r padded to nu's length
  std::vector<int> remaining;           // per label, 1-based labels
  std::vector<int> seen;
  long long count = 0;

  LRCounter(const Partition& lam, const Partition& mu, const Partition& nu) {
    int rows = static_cast<int>(nu.size());
    lam_row.assign(static_cast<size_t>(rows), 0);
    for (size_t r = 0; r < lam.size(); ++r) lam_row[r] = lam[r];
    grid.assign(static_cast<size_t>(rows), {});
    for (int r = 0; r < rows; ++r) {
      grid[static_cast<size_t>(r)].assign(static_cast<size_t>(nu[static_cast<size_t>(r)]), 0);
      for (int c = nu[static_cast<size_t>(r)] - 1; c >= lam_row[static_cast<size_t>(r)]; --c)
        order.emplace_back(r, c);
    }
    remaining.assign(mu.begin(), mu.end());
    seen.assign(mu.size() + 2, 0);
  }

  void fill(size_t idx) {
    if (idx == order.size()) {
      ++count;
      return;
    }
    auto [r, c] = order[idx];
    int labels = static_cast<int>(remaining.size());
    for (int v = 1; v <= labels; ++v) {
      if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
      if (v > 1 && seen[static_cast<size_t>(v - 1)] <= seen[static_cast<size_t>(v)]) continue;
      if (c + 1 < static_cast<int>(grid[static_cast<size_t>(r)].size()) &&
          grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] != 0 &&
          grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] < v)
        continue;
      if (r > 0 && c >= lam_row[static_cast<size_t>(r - 1)] &&
          grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= v)
        continue;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      --remaining[static_cast<size_t>(v - 1)];
      ++seen[static_cast<size_t>(v)];
      fill(idx + 1);
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
      ++remaining[static_cast<size_t>(v - 1)];
      --seen[static_cast<size_t>(v)];
    }
  }

  long long run() {
    fill(0);
    return count;
  }
};

std::map<std::tuple<Partition, Partition, Partition>, long long> g_memo;
std::mutex g_memo_mutex;

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (!is_valid_partition(lambda) || !is_valid_partition(mu) ||
      !is_valid_partition(nu))
    throw std::invalid_argument("lr_coefficient: invalid partition");
  if (weight(nu) != weight(lambda) + weight(mu)) return 0;
  if (!contains_shape(nu, lambda)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  long long value = LRCounter(lambda, mu, nu).run();
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::move(key), value);
  }
  return value;
}

long long lr_coefficient(const BetaSet& x, const BetaSet& y, const BetaSet& z) {
  return lr_coefficient(beta_to_partition(x), beta_to_partition(y),
                        beta_to_partition(z));
}

}  // namespace chsym
