#ifndef UA_GROUP_CORE_HPP
#define UA_GROUP_CORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ua/errors.hpp"

namespace ua {

using Index = int;

/// Reserved sentinel for disconnected pairs; never enters arithmetic.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Orders up to this bound get exhaustively verified structure; above it,
/// verification samples random triples.
inline constexpr int kExhaustiveCheckOrder = 512;

namespace detail {
inline std::mt19937_64 check_rng() { return std::mt19937_64{0x5eedu}; }
}  // namespace detail

/// A finite group on dense element indices 0..n-1 with a full multiplication
/// table. Immutable after construction; construction verifies the group
/// axioms (exhaustively for order <= 512, on random triples above).
class FiniteGroup {
 public:
  static FiniteGroup from_table(const Eigen::MatrixXi& table) {
    return FiniteGroup(table);
  }

  int order() const { return static_cast<int>(table_.rows()); }
  Index multiply(Index a, Index b) const { return table_(a, b); }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  const Eigen::MatrixXi& table() const { return table_; }

 private:
  explicit FiniteGroup(const Eigen::MatrixXi& table) : table_(table) {
    const int n = static_cast<int>(table.rows());
    if (n <= 0 || table.cols() != n)
      throw AxiomViolation("build_group_from_table: table must be square and nonempty");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table(a, b) < 0 || table(a, b) >= n)
          throw AxiomViolation("build_group_from_table: entry out of range at (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    // multiply must be a bijection in each argument
    for (int a = 0; a < n; ++a) {
      std::vector<char> row(n, 0), col(n, 0);
      for (int b = 0; b < n; ++b) {
        if (row[table(a, b)]++)
          throw AxiomViolation("build_group_from_table: row " + std::to_string(a) +
                               " is not a bijection");
        if (col[table(b, a)]++)
          throw AxiomViolation("build_group_from_table: column " + std::to_string(a) +
                               " is not a bijection");
      }
    }
    auto check_triple = [&](int a, int b, int c) {
      if (table(table(a, b), c) != table(a, table(b, c)))
        throw AxiomViolation("build_group_from_table: associativity fails on triple (" +
                             std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
    };
    if (n <= kExhaustiveCheckOrder) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
      auto rng = detail::check_rng();
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 200000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
    // locate the identity by scan
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = table(a, e) == a && table(e, a) == a;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0)
      throw AxiomViolation("build_group_from_table: no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (table(a, b) == identity_ && table(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      if (inverse_[a] < 0)
        throw AxiomViolation("build_group_from_table: element " + std::to_string(a) +
                             " has no two-sided inverse");
    }
  }

  Eigen::MatrixXi table_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

inline FiniteGroup build_group_from_table(const Eigen::MatrixXi& table) {
  return FiniteGroup::from_table(table);
}

/// A generating set of a group; metric computations use the symmetrized
/// closure S ∪ S⁻¹, while the generators are kept as given.
struct GeneratingSet {
  const FiniteGroup* group = nullptr;
  std::vector<Index> generators;
  std::vector<Index> symmetrized;
};

namespace detail {

/// BFS word lengths from the identity over S ∪ S⁻¹; kInfiniteDistance marks
/// unreachable elements.
inline std::vector<int> word_lengths(const FiniteGroup& g,
                                     const std::vector<Index>& symmetrized) {
  std::vector<int> len(g.order(), kInfiniteDistance);
  std::deque<Index> queue;
  len[g.identity()] = 0;
  queue.push_back(g.identity());
  while (!queue.empty()) {
    Index x = queue.front();
    queue.pop_front();
    for (Index s : symmetrized) {
      Index y = g.multiply(x, s);
      if (len[y] == kInfiniteDistance) {
        len[y] = len[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return len;
}

}  // namespace detail

inline GeneratingSet make_generating_set(const FiniteGroup& g,
                                         std::vector<Index> generators) {
  GeneratingSet out;
  out.group = &g;
  for (Index s : generators) {
    if (s < 0 || s >= g.order())
      throw NotGenerated("make_generating_set: generator index out of range");
    if (s == g.identity())
      throw NotGenerated("make_generating_set: identity is excluded from generators");
  }
  out.generators = std::move(generators);
  out.symmetrized = out.generators;
  for (Index s : out.generators) out.symmetrized.push_back(g.inverse(s));
  std::sort(out.symmetrized.begin(), out.symmetrized.end());
  out.symmetrized.erase(std::unique(out.symmetrized.begin(), out.symmetrized.end()),
                        out.symmetrized.end());
  if (g.order() > 1) {
    auto len = detail::word_lengths(g, out.symmetrized);
    for (int x = 0; x < g.order(); ++x)
      if (len[x] == kInfiniteDistance)
        throw NotGenerated("make_generating_set: element " + std::to_string(x) +
                           " is not generated");
  }
  return out;
}

/// Finite metric space with integer distances; verifies the metric axioms on
/// construction (triangle inequality exhaustively for size <= 512, sampled
/// above).
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(Eigen::MatrixXi dist) : dist_(std::move(dist)) {
    const int n = size();
    if (n <= 0 || dist_.cols() != n)
      throw TriangleViolation("FiniteMetricSpace: distance matrix must be square");
    for (int i = 0; i < n; ++i) {
      if (dist_(i, i) != 0)
        throw TriangleViolation("FiniteMetricSpace: nonzero diagonal at " +
                                std::to_string(i));
      for (int j = 0; j < n; ++j) {
        if (dist_(i, j) < 0)
          throw TriangleViolation("FiniteMetricSpace: negative distance");
        if (dist_(i, j) != dist_(j, i))
          throw TriangleViolation("FiniteMetricSpace: asymmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    auto check_triple = [&](int i, int j, int k) {
      const long long a = dist_(i, j), b = dist_(j, k);
      const int c = dist_(i, k);
      if (a == kInfiniteDistance || b == kInfiniteDistance) return;
      if (c == kInfiniteDistance || c > a + b)
        throw TriangleViolation("FiniteMetricSpace: triangle fails on (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
    };
    if (n <= kExhaustiveCheckOrder) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) check_triple(i, j, k);
    } else {
      auto rng = detail::check_rng();
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 200000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
  }

  int size() const { return static_cast<int>(dist_.rows()); }
  int dist(int x, int y) const { return dist_(x, y); }
  const Eigen::MatrixXi& matrix() const { return dist_; }

  /// Largest finite distance.
  int diameter() const {
    int d = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (dist_(i, j) != kInfiniteDistance) d = std::max(d, dist_(i, j));
    return d;
  }

 private:
  Eigen::MatrixXi dist_;
};

using PointSet = std::vector<int>;  // kept sorted and deduplicated

inline PointSet normalize_point_set(PointSet a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// Minimal word length of g over S ∪ S⁻¹; 0 for the identity.
inline int word_length(const FiniteGroup& g, const GeneratingSet& s, Index x) {
  auto len = detail::word_lengths(g, s.symmetrized);
  if (len[x] == kInfiniteDistance)
    throw NotGenerated("word_length: element " + std::to_string(x) +
                       " not generated by S");
  return len[x];
}

/// Left-invariant word metric d(g,h) = ℓ_S(g⁻¹h).
inline FiniteMetricSpace word_metric(const FiniteGroup& g, const GeneratingSet& s) {
  auto len = detail::word_lengths(g, s.symmetrized);
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    if (len[x] == kInfiniteDistance)
      throw NotGenerated("word_metric: S does not generate the group");
  Eigen::MatrixXi d(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) d(x, y) = len[g.multiply(g.inverse(x), y)];
  return FiniteMetricSpace(std::move(d));
}

/// Closed ball {y : d(center,y) <= R}.
inline PointSet ball(const FiniteMetricSpace& x, int center, int radius) {
  PointSet out;
  for (int y = 0; y < x.size(); ++y)
    if (x.dist(center, y) != kInfiniteDistance && x.dist(center, y) <= radius)
      out.push_back(y);
  return out;
}

/// R-boundary {p ∈ X∖A : d(p,A) <= R}.
inline PointSet r_boundary(const FiniteMetricSpace& x, const PointSet& a, int radius) {
  if (a.empty()) throw EmptySet("r_boundary: A is empty");
  std::vector<char> in_a(x.size(), 0);
  for (int p : a) in_a[p] = 1;
  PointSet out;
  for (int p = 0; p < x.size(); ++p) {
    if (in_a[p]) continue;
    for (int q : a) {
      if (x.dist(p, q) != kInfiniteDistance && x.dist(p, q) <= radius) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

/// Partition of A into maximal R-connected subsets, sorted by minimal point
/// index. Empty A gives an empty partition.
inline std::vector<PointSet> r_connected_components(const FiniteMetricSpace& x,
                                                    const PointSet& a, int radius) {
  const PointSet pts = normalize_point_set(a);
  const int m = static_cast<int>(pts.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int d = x.dist(pts[i], pts[j]);
      if (d != kInfiniteDistance && d <= radius) parent[find(i)] = find(j);
    }
  std::unordered_map<int, PointSet> buckets;
  for (int i = 0; i < m; ++i) buckets[find(i)].push_back(pts[i]);
  std::vector<PointSet> out;
  out.reserve(buckets.size());
  for (auto& [root, comp] : buckets) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(),
            [](const PointSet& u, const PointSet& v) { return u.front() < v.front(); });
  return out;
}

/// Coarse disjoint union: block metrics kept bit-exactly, cross-block
/// distance set to exactly n+m+diam(X_n)+diam(X_m) with 1-based block
/// indices (the minimal admissible choice).
inline FiniteMetricSpace coarse_disjoint_union(
    const std::vector<FiniteMetricSpace>& spaces) {
  if (spaces.empty()) throw EmptySet("coarse_disjoint_union: no blocks");
  int total = 0;
  for (const auto& s : spaces) total += s.size();
  Eigen::MatrixXi d(total, total);
  std::vector<int> offset(spaces.size() + 1, 0);
  for (size_t i = 0; i < spaces.size(); ++i)
    offset[i + 1] = offset[i] + spaces[i].size();
  for (size_t i = 0; i < spaces.size(); ++i) {
    for (int a = 0; a < spaces[i].size(); ++a)
      for (int b = 0; b < spaces[i].size(); ++b)
        d(offset[i] + a, offset[i] + b) = spaces[i].dist(a, b);
    for (size_t j = i + 1; j < spaces.size(); ++j) {
      const long long cross = static_cast<long long>(i + 1) + static_cast<long long>(j + 1) +
                              spaces[i].diameter() + spaces[j].diameter();
      if (cross > std::numeric_limits<int>::max() / 2)
        throw TriangleViolation("coarse_disjoint_union: cross distance overflows");
      for (int a = 0; a < spaces[i].size(); ++a)
        for (int b = 0; b < spaces[j].size(); ++b) {
          d(offset[i] + a, offset[j] + b) = static_cast<int>(cross);
          d(offset[j] + b, offset[i] + a) = static_cast<int>(cross);
        }
    }
  }
  return FiniteMetricSpace(std::move(d));  // re-verifies the triangle inequality
}

/// A family of finite groups with a shared generator-count bound.
struct FamilyMember {
  FiniteGroup group;
  std::vector<Index> generators;
};

struct FamilySpec {
  std::vector<FamilyMember> members;

  int generator_bound() const {
    int bound = 0;
    for (const auto& m : members)
      bound = std::max(bound, static_cast<int>(m.generators.size()));
    return bound;
  }
};

namespace detail {

struct PermHash {
  size_t operator()(const std::vector<int>& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace detail

struct PermutationGroupResult {
  FiniteGroup group;
  std::vector<Index> generators;  // images of the input permutations
};

/// Closes the group generated by the given permutations by breadth-first
/// product enumeration and returns the abstract group plus the generator
/// images. Empty input gives the trivial group.
inline PermutationGroupResult build_group_from_permutations(
    const std::vector<std::vector<int>>& perms, int order_cap = 200000) {
  int degree = perms.empty() ? 1 : static_cast<int>(perms.front().size());
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != degree)
      throw ParseError("build_group_from_permutations: mixed degrees");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        throw ParseError("build_group_from_permutations: not a permutation");
    }
  }
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<int>> elements{ident};
  std::unordered_map<std::vector<int>, int, detail::PermHash> index{{ident, 0}};
  for (size_t head = 0; head < elements.size(); ++head) {
    const auto current = elements[head];
    for (const auto& s : perms) {
      auto next = detail::compose(current, s);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= order_cap)
          throw OrderLimitExceeded("build_group_from_permutations: closure exceeds cap " +
                                   std::to_string(order_cap));
        elements.push_back(std::move(next));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table(a, b) = index.at(detail::compose(elements[a], elements[b]));
  PermutationGroupResult out{FiniteGroup::from_table(table), {}};
  for (const auto& p : perms) out.generators.push_back(index.at(p));
  return out;
}

}  // namespace ua

#endif  // UA_GROUP_CORE_HPP
