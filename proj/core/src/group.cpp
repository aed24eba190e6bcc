#include "chsym/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chsym {

// ---------------------------------------------------------------- elements

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.image.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.image[static_cast<size_t>(i)] = static_cast<std::int8_t>(i + 1);
  return p;
}

SignedPerm compose(const SignedPerm& f, const SignedPerm& g) {
  SignedPerm out;
  out.image.resize(g.image.size());
  for (size_t i = 0; i < g.image.size(); ++i) {
    int gi = g.image[i];
    int j = std::abs(gi) - 1;
    int fj = f.image[static_cast<size_t>(j)];
    out.image[i] = static_cast<std::int8_t>(gi < 0 ? -fj : fj);
  }
  return out;
}

SignedPerm inverse(const SignedPerm& f) {
  SignedPerm out;
  out.image.resize(f.image.size());
  for (size_t i = 0; i < f.image.size(); ++i) {
    int fi = f.image[i];
    int j = std::abs(fi) - 1;
    out.image[static_cast<size_t>(j)] =
        static_cast<std::int8_t>(fi < 0 ? -(static_cast<int>(i) + 1) : static_cast<int>(i) + 1);
  }
  return out;
}

SignedPerm conjugate(const SignedPerm& g, const SignedPerm& x) {
  return compose(compose(g, x), inverse(g));
}

Partition cycle_type(const SignedPerm& g) {
  int n = g.n();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  Partition parts;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
      j = std::abs(g.image[static_cast<size_t>(j)]) - 1;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int sign_product(const SignedPerm& g) {
  int s = 1;
  for (std::int8_t v : g.image)
    if (v < 0) s = -s;
  return s;
}

int negatives_in(const SignedPerm& g, int lo, int hi) {
  int c = 0;
  for (int i = lo; i < hi; ++i)
    if (g.image[static_cast<size_t>(i)] < 0) ++c;
  return c;
}

SignedPerm block_component(const SignedPerm& g, int lo, int hi) {
  SignedPerm out;
  out.image.resize(static_cast<size_t>(hi - lo));
  for (int i = lo; i < hi; ++i) {
    int v = g.image[static_cast<size_t>(i)];
    int j = std::abs(v) - 1;
    if (j < lo || j >= hi)
      throw std::invalid_argument("block_component: block not preserved");
    out.image[static_cast<size_t>(i - lo)] =
        static_cast<std::int8_t>(v < 0 ? -(j - lo + 1) : j - lo + 1);
  }
  return out;
}

// --------------------------------------------------------------- GroupData

GroupData::GroupData(int n, GroupKind kind) : n_(n), kind_(kind) {
  if (n < 0 || n > 5)
    throw std::invalid_argument("GroupData: supported range is 0 <= n <= 5");
  // enumerate permutations x sign vectors
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (kind == GroupKind::D && __builtin_popcount(mask) % 2 != 0) continue;
      SignedPerm g;
      g.image.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        g.image[static_cast<size_t>(i)] =
            static_cast<std::int8_t>((mask >> i & 1) ? -perm[static_cast<size_t>(i)]
                                                     : perm[static_cast<size_t>(i)]);
      elements_.push_back(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(elements_.begin(), elements_.end());

  // conjugacy classes by orbit partition under conjugation
  class_of_.assign(elements_.size(), -1);
  for (size_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] >= 0) continue;
    int cid = static_cast<int>(class_reps_.size());
    class_reps_.push_back(elements_[start]);
    long long size = 0;
    std::deque<int> queue{static_cast<int>(start)};
    class_of_[start] = cid;
    while (!queue.empty()) {
      int ei = queue.front();
      queue.pop_front();
      ++size;
      for (const SignedPerm& g : elements_) {
        SignedPerm c = conjugate(g, elements_[static_cast<size_t>(ei)]);
        int ci = element_index(c);
        if (class_of_[static_cast<size_t>(ci)] < 0) {
          class_of_[static_cast<size_t>(ci)] = cid;
          queue.push_back(ci);
        }
      }
    }
    class_sizes_.push_back(size);
  }
}

const GroupData& GroupData::get(int n, GroupKind kind) {
  static std::map<std::pair<int, int>, std::unique_ptr<GroupData>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<GroupData>(new GroupData(n, kind))).first;
  return *it->second;
}

int GroupData::element_index(const SignedPerm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int GroupData::class_of(const SignedPerm& g) const {
  int ei = element_index(g);
  if (ei < 0) throw std::invalid_argument("class_of: element not in group");
  return class_of_[static_cast<size_t>(ei)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Rat inner(const ClassFunction& f, const ClassFunction& g) {
  const GroupData* G = f.group();
  if (G != g.group()) throw std::invalid_argument("inner: different groups");
  Rat acc(0);
  for (int c = 0; c < G->num_classes(); ++c)
    acc += Rat(G->class_size(c)) * f.at(c) * g.at(c);
  return acc / Rat(G->order());
}

// ------------------------------------------------------ Murnaghan-Nakayama

namespace {

long long mn_on_beta(std::vector<int> beta, const Partition& mu, size_t idx) {
  if (idx == mu.size()) return 1;
  int r = mu[idx];
  long long acc = 0;
  for (size_t k = 0; k < beta.size(); ++k) {
    int target = beta[k] - r;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target)) continue;
    // height = number of beta entries strictly between target and beta[k]
    int ht = 0;
    for (int v : beta)
      if (v > target && v < beta[k]) ++ht;
    std::vector<int> next = beta;
    next[k] = target;
    std::sort(next.begin(), next.end());
    acc += (ht % 2 ? -1 : 1) * mn_on_beta(std::move(next), mu, idx + 1);
  }
  return acc;
}

}  // namespace

long long mn_char(const Partition& lambda, const Partition& mu) {
  long long wl = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  long long wm = std::accumulate(mu.begin(), mu.end(), 0LL);
  if (wl != wm) throw std::invalid_argument("mn_char: |lambda| != |mu|");
  if (wl == 0) return 1;
  int rows = static_cast<int>(lambda.size());
  return mn_on_beta(partition_to_beta(lambda, rows).entries(), mu, 0);
}

// ------------------------------------------------------------- characters

namespace {

std::map<std::tuple<int, int, Partition, Partition>, ClassFunction> g_wn_cache;
std::mutex g_wn_mutex;

}  // namespace

bool subgroup_contains(SubgroupShape shape, int a, int b, const SignedPerm& g) {
  int n = g.n();
  if (shape == SubgroupShape::D_in_B) return sign_product(g) == 1;
  if (a + b != n) throw std::invalid_argument("subgroup_contains: a+b != n");
  for (int i = 0; i < n; ++i) {
    int j = std::abs(g.image[static_cast<size_t>(i)]) - 1;
    if ((i < a) != (j < a)) return false;
  }
  int na = negatives_in(g, 0, a) % 2, nb = negatives_in(g, a, n) % 2;
  switch (shape) {
    case SubgroupShape::BxB_in_B: return true;
    case SubgroupShape::DxD_in_D: return na == 0 && nb == 0;
    case SubgroupShape::H_twisted: return na == nb;
    case SubgroupShape::DxB_in_B: return na == 0;
    case SubgroupShape::BxD_in_B: return nb == 0;
    case SubgroupShape::D_in_B: return true;  // handled above
  }
  return false;
}

long long subgroup_order(SubgroupShape shape, int a, int b, const GroupData& g) {
  long long count = 0;
  for (const SignedPerm& x : g.elements())
    if (subgroup_contains(shape, a, b, x)) ++count;
  return count;
}

ClassFunction induce_cf(SubgroupShape shape, int a, int b,
                        const std::function<Rat(const SignedPerm&)>& f,
                        const GroupData& g) {
  // Ind f (C) = |G| / (|C| |H|) * sum over H-elements inside C.
  std::vector<Rat> sums(static_cast<size_t>(g.num_classes()), Rat(0));
  long long hsize = 0;
  for (size_t ei = 0; ei < g.elements().size(); ++ei) {
    const SignedPerm& x = g.elements()[ei];
    if (!subgroup_contains(shape, a, b, x)) continue;
    ++hsize;
    sums[static_cast<size_t>(g.class_of_index(static_cast<int>(ei)))] += f(x);
  }
  if (hsize == 0) throw std::invalid_argument("induce_cf: empty subgroup");
  ClassFunction out(&g);
  for (int c = 0; c < g.num_classes(); ++c)
    out[c] = sums[static_cast<size_t>(c)] * Rat(g.order()) /
             (Rat(g.class_size(c)) * Rat(hsize));
  return out;
}

const ClassFunction& wn_char(const Partition& top, const Partition& bottom,
                             const GroupData& g) {
  if (g.kind() != GroupKind::B)
    throw std::invalid_argument("wn_char: kind-B group expected");
  long long wa = std::accumulate(top.begin(), top.end(), 0LL);
  long long wb = std::accumulate(bottom.begin(), bottom.end(), 0LL);
  if (wa + wb != g.n())
    throw std::invalid_argument("wn_char: |top|+|bottom| != n");
  auto key = std::make_tuple(g.n(), static_cast<int>(g.kind()), top, bottom);
  {
    std::lock_guard<std::mutex> lock(g_wn_mutex);
    auto it = g_wn_cache.find(key);
    if (it != g_wn_cache.end()) return it->second;
  }
  int a = static_cast<int>(wa);
  auto f = [&](const SignedPerm& x) -> Rat {
    SignedPerm x1 = block_component(x, 0, a);
    SignedPerm x2 = block_component(x, a, x.n());
    long long v = mn_char(top, cycle_type(x1)) * mn_char(bottom, cycle_type(x2));
    return Rat(v * sign_product(x2));
  };
  ClassFunction cf = induce_cf(SubgroupShape::BxB_in_B, a, g.n() - a, f, g);
  std::lock_guard<std::mutex> lock(g_wn_mutex);
  return g_wn_cache.emplace(key, std::move(cf)).first->second;
}

std::vector<Symbol> b_irr_labels(int n) {
  std::vector<Symbol> out;
  for (int k = 0; k <= n; ++k)
    for (const Partition& la : partitions_of(k))
      for (const Partition& mu : partitions_of(n - k))
        out.push_back(bipartition_to_symbol(la, mu));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Symbol> d_irr_labels(int n) {
  std::set<Symbol> out;
  for (int k = 0; k <= n; ++k)
    for (const Partition& la : partitions_of(k))
      for (const Partition& mu : partitions_of(n - k)) {
        Symbol s = bipartition_to_symbol(la, mu).as_unordered();
        if (is_degenerate(s) && n >= 2) {
          out.insert(s.with_decoration(Decoration::Plus));
          out.insert(s.with_decoration(Decoration::Minus));
        } else {
          out.insert(s);
        }
      }
  return std::vector<Symbol>(out.begin(), out.end());
}

// ------------------------------------------------- split halves machinery

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(int k) { return Mat(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k), Rat(0))); }

Mat mul(const Mat& x, const Mat& y) {
  int k = static_cast<int>(x.size());
  Mat out = zero_mat(k);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      if (x[static_cast<size_t>(i)][static_cast<size_t>(l)] == Rat(0)) continue;
      for (int j = 0; j < k; ++j)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            x[static_cast<size_t>(i)][static_cast<size_t>(l)] * y[static_cast<size_t>(l)][static_cast<size_t>(j)];
    }
  return out;
}

// Nullspace basis of the homogeneous system rows * x = 0 (columns = vars).
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, int vars) {
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < vars && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != Rat(0)) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(piv)]);
    Rat inv = Rat(1) / rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int j = 0; j < vars; ++j) rows[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      Rat factor = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (factor == Rat(0)) continue;
      for (int j = 0; j < vars; ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            factor * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(vars), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < vars; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rat> v(static_cast<size_t>(vars), Rat(0));
    v[static_cast<size_t>(free)] = Rat(1);
    for (int i = 0; i < r; ++i) {
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
          -rows[static_cast<size_t>(i)][static_cast<size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

long long isqrt_exact(long long v) {
  if (v < 0) throw std::logic_error("isqrt_exact: negative");
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) throw std::logic_error("isqrt_exact: not a perfect square");
  return r;
}

Rat rational_sqrt(const Rat& v) {
  long long num = v.numerator(), den = v.denominator();
  return Rat(isqrt_exact(num * den), den);
}

// Halves of Res_{W_n'}((lambda;lambda)); requires chi_lambda linear.
std::pair<ClassFunction, ClassFunction> split_halves(const Partition& lambda, int n) {
  const GroupData& B = GroupData::get(n, GroupKind::B);
  const GroupData& D = GroupData::get(n, GroupKind::D);
  int m = n / 2;
  long long wl = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  if (2 * wl != n) throw std::logic_error("split_halves: |lambda| != n/2");
  bool is_sign = static_cast<int>(lambda.size()) == m && m > 1;
  if (!lambda.empty() && lambda[0] != m && !is_sign)
    throw std::logic_error("split_halves: base character is not linear");

  auto lin = [&](const SignedPerm& x) -> int {
    if (!is_sign) return 1;
    // sign character of the underlying permutation
    Partition ct = cycle_type(x);
    int s = 1;
    for (int part : ct)
      if (part % 2 == 0) s = -s;
    return s;
  };
  auto theta = [&](const SignedPerm& h) -> int {
    SignedPerm h1 = block_component(h, 0, m);
    SignedPerm h2 = block_component(h, m, n);
    return lin(h1) * lin(h2) * sign_product(h2);
  };
  auto in_h0 = [&](const SignedPerm& g) {
    return subgroup_contains(SubgroupShape::BxB_in_B, m, m, g);
  };

  // left cosets of W_m x W_m in W_n
  std::vector<int> coset_of(B.elements().size(), -1);
  std::vector<SignedPerm> reps;
  for (size_t ei = 0; ei < B.elements().size(); ++ei) {
    if (coset_of[ei] >= 0) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(B.elements()[ei]);
    for (size_t ej = 0; ej < B.elements().size(); ++ej) {
      if (coset_of[ej] >= 0) continue;
      SignedPerm q = compose(inverse(B.elements()[ei]), B.elements()[ej]);
      if (in_h0(q)) coset_of[ej] = cid;
    }
  }
  int k = static_cast<int>(reps.size());

  auto rho = [&](const SignedPerm& g) -> Mat {
    Mat mat = zero_mat(k);
    for (int j = 0; j < k; ++j) {
      SignedPerm gj = compose(g, reps[static_cast<size_t>(j)]);
      int i = coset_of[static_cast<size_t>(B.element_index(gj))];
      SignedPerm h = compose(inverse(reps[static_cast<size_t>(i)]), gj);
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(theta(h));
    }
    return mat;
  };

  // generators of W_n' = ker(sign product): s_1..s_{n-1} and u = s_n s_{n-1} s_n
  std::vector<SignedPerm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    SignedPerm s = SignedPerm::identity(n);
    std::swap(s.image[static_cast<size_t>(i)], s.image[static_cast<size_t>(i + 1)]);
    gens.push_back(s);
  }
  {
    SignedPerm u = SignedPerm::identity(n);
    u.image[static_cast<size_t>(n - 2)] = static_cast<std::int8_t>(-n);
    u.image[static_cast<size_t>(n - 1)] = static_cast<std::int8_t>(-(n - 1));
    gens.push_back(u);
  }

  // commutant of the restriction to W_n'
  std::vector<std::vector<Rat>> eqs;
  for (const SignedPerm& g : gens) {
    Mat R = rho(g);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<Rat> row(static_cast<size_t>(k * k), Rat(0));
        // (R T - T R)_{ij} = sum_l R_il T_lj - T_il R_lj
        for (int l = 0; l < k; ++l) {
          row[static_cast<size_t>(l * k + j)] += R[static_cast<size_t>(i)][static_cast<size_t>(l)];
          row[static_cast<size_t>(i * k + l)] -= R[static_cast<size_t>(l)][static_cast<size_t>(j)];
        }
        eqs.push_back(std::move(row));
      }
  }
  auto basis = nullspace(std::move(eqs), k * k);
  if (basis.size() != 2)
    throw std::logic_error("split_halves: commutant dimension is not 2");
  auto as_mat = [&](const std::vector<Rat>& v) {
    Mat mat = zero_mat(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(i * k + j)];
    return mat;
  };
  auto is_scalar = [&](const Mat& mat) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (mat[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
            (i == j ? mat[0][0] : Rat(0)))
          return false;
    return true;
  };
  Mat T = as_mat(basis[0]);
  if (is_scalar(T)) T = as_mat(basis[1]);
  if (is_scalar(T)) throw std::logic_error("split_halves: no non-scalar intertwiner");

  // minimal polynomial T^2 = alpha T + beta I
  Mat T2 = mul(T, T);
  Rat alpha(0), beta(0);
  bool found = false;
  for (int i = 0; i < k && !found; ++i)
    for (int j = 0; j < k && !found; ++j) {
      if (i != j && T[static_cast<size_t>(i)][static_cast<size_t>(j)] != Rat(0)) {
        alpha = T2[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                T[static_cast<size_t>(i)][static_cast<size_t>(j)];
        beta = T2[0][0] - alpha * T[0][0];
        found = true;
      }
    }
  if (!found) {
    // diagonal T with two distinct values
    Rat t0 = T[0][0];
    int other = -1;
    for (int i = 1; i < k; ++i)
      if (T[static_cast<size_t>(i)][static_cast<size_t>(i)] != t0) { other = i; break; }
    if (other < 0) throw std::logic_error("split_halves: scalar T slipped through");
    Rat t1 = T[static_cast<size_t>(other)][static_cast<size_t>(other)];
    alpha = (T2[0][0] - T2[static_cast<size_t>(other)][static_cast<size_t>(other)]) / (t0 - t1);
    beta = T2[0][0] - alpha * t0;
  }
  Rat disc = alpha * alpha + Rat(4) * beta;
  Rat root = rational_sqrt(disc);
  Rat mu_plus = (alpha + root) / Rat(2), mu_minus = (alpha - root) / Rat(2);
  if (mu_plus == mu_minus) throw std::logic_error("split_halves: equal eigenvalues");

  Mat P = zero_mat(k);  // projection onto the mu_plus eigenspace
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat v = T[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j) v -= mu_minus;
      P[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / (mu_plus - mu_minus);
    }

  ClassFunction h1(&D), h2(&D);
  const ClassFunction& full = wn_char(lambda, lambda, B);
  for (int c = 0; c < D.num_classes(); ++c) {
    Mat R = rho(D.class_rep(c));
    Rat tr(0);
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l)
        tr += R[static_cast<size_t>(i)][static_cast<size_t>(l)] * P[static_cast<size_t>(l)][static_cast<size_t>(i)];
    h1[c] = tr;
    h2[c] = full.at(B.class_of(D.class_rep(c))) - tr;
  }
  if (inner(h1, h1) != Rat(1) || inner(h2, h2) != Rat(1))
    throw std::logic_error("split_halves: halves are not irreducible");

  // deterministic labelling: "+" carries the lexicographically larger values
  for (int c = 0; c < D.num_classes(); ++c) {
    if (h1.at(c) == h2.at(c)) continue;
    if (h1.at(c) > h2.at(c)) return {h1, h2};
    return {h2, h1};
  }
  throw std::logic_error("split_halves: identical halves");
}

std::map<std::pair<int, Symbol>, ClassFunction> g_dchar_cache;
std::mutex g_dchar_mutex;

}  // namespace

const ClassFunction& d_irr_char(const Symbol& label, int n) {
  Symbol key = symbol_normalize(label);
  {
    std::lock_guard<std::mutex> lock(g_dchar_mutex);
    auto it = g_dchar_cache.find({n, key});
    if (it != g_dchar_cache.end()) return it->second;
  }
  const GroupData& B = GroupData::get(n, GroupKind::B);
  const GroupData& D = GroupData::get(n, GroupKind::D);
  ClassFunction cf(&D);
  if (is_degenerate(key) && n >= 2) {
    if (key.decoration() == Decoration::None)
      throw std::invalid_argument("d_irr_char: degenerate label needs a decoration");
    auto [la, mu] = symbol_to_bipartition(key.without_decoration().as_ordered());
    auto halves = split_halves(la, n);
    cf = key.decoration() == Decoration::Plus ? halves.first : halves.second;
  } else {
    auto [la, mu] = symbol_to_bipartition(key.as_ordered());
    const ClassFunction& full = wn_char(la, mu, B);
    for (int c = 0; c < D.num_classes(); ++c)
      cf[c] = full.at(B.class_of(D.class_rep(c)));
  }
  std::lock_guard<std::mutex> lock(g_dchar_mutex);
  return g_dchar_cache.emplace(std::make_pair(n, key), std::move(cf)).first->second;
}

// ----------------------------------------------------------- decomposition

std::map<Symbol, long long> decompose_b(const ClassFunction& f) {
  const GroupData* G = f.group();
  std::map<Symbol, long long> out;
  for (const Symbol& label : b_irr_labels(G->n())) {
    auto [la, mu] = symbol_to_bipartition(label);
    Rat m = inner(f, wn_char(la, mu, *G));
    if (m == Rat(0)) continue;
    if (m.denominator() != 1 || m < Rat(0))
      throw std::logic_error("decompose_b: non-integral multiplicity");
    out[label] = m.numerator();
  }
  return out;
}

std::map<Symbol, long long> decompose_d(const ClassFunction& f) {
  const GroupData* G = f.group();
  std::map<Symbol, long long> out;
  for (const Symbol& label : d_irr_labels(G->n())) {
    Rat m = inner(f, d_irr_char(label, G->n()));
    if (m == Rat(0)) continue;
    if (m.denominator() != 1 || m < Rat(0))
      throw std::logic_error("decompose_d: non-integral multiplicity");
    out[label] = m.numerator();
  }
  return out;
}

// ----------------------------------------------------------------- verify

std::string to_string(SubgroupShape s) {
  switch (s) {
    case SubgroupShape::BxB_in_B: return "BxB_in_B";
    case SubgroupShape::DxD_in_D: return "DxD_in_D";
    case SubgroupShape::H_twisted: return "H_twisted";
    case SubgroupShape::D_in_B: return "D_in_B";
    case SubgroupShape::DxB_in_B: return "DxB_in_B";
    case SubgroupShape::BxD_in_B: return "BxD_in_B";
  }
  return "?";
}

GroupKind ambient_kind(SubgroupShape s) {
  return (s == SubgroupShape::DxD_in_D || s == SubgroupShape::H_twisted)
             ? GroupKind::D
             : GroupKind::B;
}

namespace {

void compare_outputs(const VirtualCharacter& symbolic,
                     const std::map<Symbol, long long>& oracle,
                     const std::string& label, VerifyReport& report) {
  std::map<Symbol, long long> want = oracle;
  // unresolved degenerate pairs: check the total, report the actual split
  for (const auto& [base, total] : symbolic.unresolved_terms()) {
    long long got_plus = 0, got_minus = 0;
    auto itp = want.find(base.with_decoration(Decoration::Plus));
    if (itp != want.end()) { got_plus = itp->second; want.erase(itp); }
    auto itm = want.find(base.with_decoration(Decoration::Minus));
    if (itm != want.end()) { got_minus = itm->second; want.erase(itm); }
    if (got_plus + got_minus != total)
      report.mismatches.push_back({label + " @ " + to_string(base),
                                   std::to_string(got_plus) + "+" + std::to_string(got_minus),
                                   "split total " + std::to_string(total)});
    else
      report.notes.push_back(label + ": unresolved pair " + to_string(base) +
                             " resolves as (+" + std::to_string(got_plus) + ", -" +
                             std::to_string(got_minus) + ")");
  }
  std::set<Symbol> keys;
  for (const auto& [k, v] : want) keys.insert(k);
  for (const auto& [k, v] : symbolic.terms()) keys.insert(k);
  for (const Symbol& k : keys) {
    long long expect = 0, got = symbolic[k];
    auto it = want.find(k);
    if (it != want.end()) expect = it->second;
    if (expect != got)
      report.mismatches.push_back({label + " @ " + to_string(k),
                                   std::to_string(expect), std::to_string(got)});
  }
}

std::function<Rat(const SignedPerm&)> product_evaluator(
    const ClassFunction& f1, const GroupData& g1, const ClassFunction& f2,
    const GroupData& g2, int a) {
  return [&f1, &g1, &f2, &g2, a](const SignedPerm& x) -> Rat {
    SignedPerm x1 = block_component(x, 0, a);
    SignedPerm x2 = block_component(x, a, x.n());
    Rat v1 = g1.n() == 0 ? Rat(1) : f1.at(g1.class_of(x1));
    Rat v2 = g2.n() == 0 ? Rat(1) : f2.at(g2.class_of(x2));
    return v1 * v2;
  };
}

}  // namespace

VerifyReport verify_against_symbols(SubgroupShape shape, int a, int b,
                                    HReading reading) {
  VerifyReport report;
  report.shape = shape;
  report.a = a;
  report.b = b;
  int n = shape == SubgroupShape::D_in_B ? a : a + b;
  const GroupData& G = GroupData::get(n, ambient_kind(shape));
  const GroupData& Ba = GroupData::get(a, GroupKind::B);
  const GroupData& Bb = GroupData::get(shape == SubgroupShape::D_in_B ? 0 : b,
                                       GroupKind::B);
  const GroupData& Da = GroupData::get(a, GroupKind::D);
  const GroupData& Db = GroupData::get(shape == SubgroupShape::D_in_B ? 0 : b,
                                       GroupKind::D);

  auto run_case = [&](const std::string& label,
                      const std::function<Rat(const SignedPerm&)>& f,
                      const VirtualCharacter& symbolic) {
    ClassFunction ind = induce_cf(shape, a, b, f, G);
    auto oracle = ambient_kind(shape) == GroupKind::B ? decompose_b(ind)
                                                      : decompose_d(ind);
    compare_outputs(symbolic, oracle, label, report);
  };

  switch (shape) {
    case SubgroupShape::BxB_in_B: {
      for (const Symbol& A : b_irr_labels(a))
        for (const Symbol& B : b_irr_labels(b)) {
          auto [la, l2] = symbol_to_bipartition(A);
          auto [mb, m2] = symbol_to_bipartition(B);
          const ClassFunction& fa = wn_char(la, l2, Ba);
          const ClassFunction& fb = wn_char(mb, m2, Bb);
          run_case(to_string(A) + " x " + to_string(B),
                   product_evaluator(fa, Ba, fb, Bb, a),
                   induce_product_b(A, B));
        }
      break;
    }
    case SubgroupShape::D_in_B: {
      for (const Symbol& L : d_irr_labels(n)) {
        const GroupData& Dn = GroupData::get(n, GroupKind::D);
        const ClassFunction& fl = d_irr_char(L, n);
        auto f = [&](const SignedPerm& x) -> Rat { return fl.at(Dn.class_of(x)); };
        run_case(to_string(L), f, induce_d_in_b(L));
      }
      break;
    }
    case SubgroupShape::DxD_in_D: {
      for (const Symbol& A : d_irr_labels(a))
        for (const Symbol& B : d_irr_labels(b)) {
          const ClassFunction& fa = d_irr_char(A, a);
          const ClassFunction& fb = d_irr_char(B, b);
          run_case(to_string(A) + " x " + to_string(B),
                   product_evaluator(fa, Da, fb, Db, a),
                   induce_product_d(A, B));
        }
      break;
    }
    case SubgroupShape::H_twisted: {
      // non-degenerate labels up to simultaneous row swap
      for (const Symbol& A : b_irr_labels(a))
        for (const Symbol& B : b_irr_labels(b)) {
          if (is_degenerate(A) || is_degenerate(B)) continue;
          if (std::make_pair(A.swapped(), B.swapped()) <
              std::make_pair(Symbol(A), Symbol(B)))
            continue;  // one representative per orbit
          auto [la, l2] = symbol_to_bipartition(A);
          auto [mb, m2] = symbol_to_bipartition(B);
          const ClassFunction& fa = wn_char(la, l2, Ba);
          const ClassFunction& fb = wn_char(mb, m2, Bb);
          run_case(to_string(A) + " x " + to_string(B),
                   product_evaluator(fa, Ba, fb, Bb, a),
                   induce_h(A, B, reading));
        }
      report.notes.push_back(std::string("coefficient reading: ") +
                             (reading == HReading::Mixed ? "mixed" : "printed"));
      break;
    }
    case SubgroupShape::DxB_in_B: {
      for (const Symbol& A : d_irr_labels(a))
        for (const Symbol& B : b_irr_labels(b)) {
          const ClassFunction& fa = d_irr_char(A, a);
          auto [mb, m2] = symbol_to_bipartition(B);
          const ClassFunction& fb = wn_char(mb, m2, Bb);
          run_case(to_string(A) + " x " + to_string(B),
                   product_evaluator(fa, Da, fb, Bb, a),
                   induce_product_mixed(A, B, /*first_is_d=*/true));
        }
      break;
    }
    case SubgroupShape::BxD_in_B: {
      for (const Symbol& A : b_irr_labels(a))
        for (const Symbol& B : d_irr_labels(b)) {
          auto [la, l2] = symbol_to_bipartition(A);
          const ClassFunction& fa = wn_char(la, l2, Ba);
          const ClassFunction& fb = d_irr_char(B, b);
          run_case(to_string(A) + " x " + to_string(B),
                   product_evaluator(fa, Ba, fb, Db, a),
                   induce_product_mixed(A, B, /*first_is_d=*/false));
        }
      break;
    }
  }
  return report;
}

long long twisted_d_coset_multiplicity(const Symbol& A, const Symbol& B,
                                       const Symbol& X, int a, int b) {
  int n = a + b;
  const GroupData& Bn = GroupData::get(n, GroupKind::B);
  const GroupData& Dn = GroupData::get(n, GroupKind::D);
  bool twist_on_first = a % 2 == 1;
  SubgroupShape shape = twist_on_first ? SubgroupShape::BxD_in_B
                                       : SubgroupShape::DxB_in_B;
  ClassFunction ind(&Bn);
  if (twist_on_first) {
    auto [la, l2] = symbol_to_bipartition(A.as_ordered());
    const ClassFunction& fa = wn_char(la, l2, GroupData::get(a, GroupKind::B));
    const ClassFunction& fb = d_irr_char(B, b);
    ind = induce_cf(shape, a, b,
                    product_evaluator(fa, GroupData::get(a, GroupKind::B), fb,
                                      GroupData::get(b, GroupKind::D), a),
                    Bn);
  } else {
    const ClassFunction& fa = d_irr_char(A, a);
    auto [mb, m2] = symbol_to_bipartition(B.as_ordered());
    const ClassFunction& fb = wn_char(mb, m2, GroupData::get(b, GroupKind::B));
    ind = induce_cf(shape, a, b,
                    product_evaluator(fa, GroupData::get(a, GroupKind::D), fb,
                                      GroupData::get(b, GroupKind::B), a),
                    Bn);
  }
  auto [xl, xm] = symbol_to_bipartition(X.as_ordered());
  const ClassFunction& chi = wn_char(xl, xm, Bn);
  Rat whole = inner(ind, chi);
  // restriction inner product over W_n'
  Rat restricted(0);
  for (int c = 0; c < Dn.num_classes(); ++c) {
    int bc = Bn.class_of(Dn.class_rep(c));
    restricted += Rat(Dn.class_size(c)) * ind.at(bc) * chi.at(bc);
  }
  restricted /= Rat(Dn.order());
  Rat coset = Rat(2) * whole - restricted;
  if (coset.denominator() != 1)
    throw std::logic_error("twisted_d_coset_multiplicity: non-integral");
  return coset.numerator();
}

}  // namespace chsym
