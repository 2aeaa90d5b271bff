#ifndef UA_CERTIFICATES_HPP
#define UA_CERTIFICATES_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ua/errors.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"

namespace ua {

struct FolnerCertificate {
  const FiniteGroup* group = nullptr;
  std::vector<Index> generators;
  PointSet set;
  int radius = 1;
  double ratio = 0.0;   // ♯∂_R F / ♯F, computed in exact integers
  int d_bound = 0;      // smallest D with F ⊆ B(e,D)
};

struct HRCertificate {
  GroupVector f;
  double epsilon = 0.0;  // achieved displacement over the listed generators
  int support_card = 0;
  double l1_norm = 0.0;
  int d_bound = 0;
};

/// Quantitative parameter chain; the stage formulas are recomputed on access.
struct QuantChain {
  double epsilon = 0.0;
  double l1_bound = 0.0;  // M

  double stage2_epsilon() const { return 2.0 * epsilon; }
  double stage2_support_cap() const {
    return 4.0 * l1_bound * l1_bound * (1.0 + epsilon) * (1.0 + epsilon) /
           (epsilon * epsilon);
  }
  double stage3_epsilon() const { return stage2_epsilon(); }
  double stage3_radius() const {
    const double n = stage2_support_cap();
    return 4.0 * (n + 2.0) * n;
  }
};

inline QuantChain quantitative_chain(double epsilon, double l1_bound) {
  if (epsilon <= 0.0)
    throw PreconditionViolated("quantitative_chain: epsilon must be positive");
  if (l1_bound < 1.0)
    throw PreconditionViolated(
        "quantitative_chain: M must be >= 1 (a unit l2 vector has l1 norm >= 1)");
  return QuantChain{epsilon, l1_bound};
}

namespace detail {

/// ♯∂_R F counted in integers over the word metric.
inline long long boundary_count(const FiniteGroup& g, const std::vector<int>& len,
                                const std::vector<char>& in_f, int radius) {
  long long count = 0;
  for (Index p = 0; p < g.order(); ++p) {
    if (in_f[p]) continue;
    const Index pi = g.inverse(p);
    for (Index q = 0; q < g.order(); ++q) {
      if (!in_f[q]) continue;
      const int d = len[g.multiply(pi, q)];
      if (d != kInfiniteDistance && d <= radius) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline std::vector<char> membership(int order, const PointSet& f) {
  std::vector<char> in_f(order, 0);
  for (int p : f) in_f[p] = 1;
  return in_f;
}

inline int support_d_bound(const std::vector<int>& len, const std::vector<Index>& pts) {
  int d = 0;
  for (Index p : pts) d = std::max(d, len[p]);
  return d;
}

}  // namespace detail

/// Følner ratio ♯∂_R F / ♯F over the word metric, exact in integers.
inline double folner_ratio(const FiniteGroup& g, const GeneratingSet& s,
                           const PointSet& f, int radius) {
  if (f.empty()) throw EmptySet("folner_ratio: F is empty");
  const auto len = detail::word_lengths(g, s.symmetrized);
  const auto in_f = detail::membership(g.order(), f);
  const long long boundary = detail::boundary_count(g, len, in_f, radius);
  return static_cast<double>(boundary) / static_cast<double>(f.size());
}

inline FolnerCertificate make_folner_certificate(const FiniteGroup& g,
                                                 const GeneratingSet& s, PointSet f,
                                                 int radius) {
  f = normalize_point_set(std::move(f));
  FolnerCertificate cert;
  cert.group = &g;
  cert.generators = s.generators;
  cert.radius = radius;
  cert.ratio = folner_ratio(g, s, f, radius);
  const auto len = detail::word_lengths(g, s.symmetrized);
  cert.d_bound = detail::support_d_bound(len, f);
  cert.set = std::move(f);
  return cert;
}

/// Searches for F with ♯∂_R F / ♯F <= epsilon: balls around the identity
/// first, then greedy local improvement, then exhaustive enumeration as a
/// fallback oracle when the order is at most 20. Throws BudgetExhausted with
/// the best ratio found otherwise; that is evidence, not proof, of failure.
inline FolnerCertificate search_folner_set(const FiniteGroup& g, const GeneratingSet& s,
                                           int radius, double epsilon,
                                           int budget = 1000) {
  if (epsilon <= 0.0 && g.order() > 1)
    throw PreconditionViolated("search_folner_set: epsilon must be positive");
  const auto len = detail::word_lengths(g, s.symmetrized);
  const int diam = *std::max_element(len.begin(), len.end());

  double best_ratio = std::numeric_limits<double>::infinity();
  PointSet best_set;
  auto consider = [&](const PointSet& f) {
    const double r = folner_ratio(g, s, f, radius);
    if (r < best_ratio) {
      best_ratio = r;
      best_set = f;
    }
    return r <= epsilon || f.size() == static_cast<size_t>(g.order());
  };

  // Balls B(e,D) for growing D. The whole group always has ratio 0.
  for (int d = 0; d <= diam; ++d) {
    PointSet f;
    for (Index p = 0; p < g.order(); ++p)
      if (len[p] <= d) f.push_back(p);
    if (consider(f) && best_ratio <= epsilon)
      return make_folner_certificate(g, s, best_set, radius);
  }

  // Greedy local improvement from the best set so far.
  PointSet current = best_set;
  for (int step = 0; step < budget; ++step) {
    const auto in_f = detail::membership(g.order(), current);
    const double current_ratio = folner_ratio(g, s, current, radius);
    double best_move_ratio = current_ratio;
    PointSet best_move;
    auto try_set = [&](PointSet f) {
      if (f.empty()) return;
      const double r = folner_ratio(g, s, f, radius);
      if (r < best_move_ratio) {
        best_move_ratio = r;
        best_move = std::move(f);
      }
    };
    for (Index p = 0; p < g.order(); ++p) {
      if (in_f[p]) continue;
      PointSet f = current;
      f.push_back(p);
      try_set(normalize_point_set(std::move(f)));
    }
    for (size_t i = 0; i < current.size(); ++i) {
      PointSet f = current;
      f.erase(f.begin() + static_cast<long>(i));
      try_set(std::move(f));
    }
    if (best_move.empty()) break;  // local optimum
    current = std::move(best_move);
    if (best_move_ratio < best_ratio) {
      best_ratio = best_move_ratio;
      best_set = current;
    }
    if (best_ratio <= epsilon) return make_folner_certificate(g, s, best_set, radius);
  }

  // Exhaustive oracle for tiny groups only.
  if (g.order() <= 20) {
    const int n = g.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      PointSet f;
      for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) f.push_back(p);
      const double r = folner_ratio(g, s, f, radius);
      if (r < best_ratio) {
        best_ratio = r;
        best_set = f;
      }
      if (best_ratio <= epsilon) return make_folner_certificate(g, s, best_set, radius);
    }
  }

  throw BudgetExhausted("search_folner_set: no set with ratio <= " +
                            std::to_string(epsilon) + " found; best ratio " +
                            std::to_string(best_ratio),
                        best_ratio);
}

/// Følner set to Hulanicki-Reiter vector: f = χ_F/√♯F with epsilon the exact
/// max over generators of √(♯(F Δ Fs⁻¹)/♯F).
inline HRCertificate folner_to_hr(const FiniteGroup& g, const GeneratingSet& s,
                                  const PointSet& f_set) {
  if (f_set.empty()) throw EmptySet("folner_to_hr: F is empty");
  const PointSet f = normalize_point_set(f_set);
  HRCertificate cert;
  cert.f = normalized_indicator(g, f);
  const auto in_f = detail::membership(g.order(), f);
  long long worst_sym_diff = 0;
  for (Index gen : s.generators) {
    // supp(s·χ_F) = F s⁻¹, and ♯(F Δ Fs⁻¹) = 2·♯(F ∖ Fs⁻¹) since both sets
    // have cardinality ♯F. p ∈ F ∖ Fs⁻¹ exactly when ps leaves F.
    long long missing = 0;
    for (int p : f)
      if (!in_f[g.multiply(p, gen)]) ++missing;
    worst_sym_diff = std::max(worst_sym_diff, 2 * missing);
  }
  cert.epsilon =
      std::sqrt(static_cast<double>(worst_sym_diff) / static_cast<double>(f.size()));
  cert.support_card = static_cast<int>(f.size());
  cert.l1_norm = lp_norm(cert.f, 1);
  const auto len = detail::word_lengths(g, s.symmetrized);
  cert.d_bound = detail::support_d_bound(len, f);
  return cert;
}

/// Hulanicki-Reiter vector to Følner set by a level-set sweep: among
/// F_t = {γ : f(γ)² >= t} over the distinct values of f², return the set with
/// the smallest R-boundary ratio.
inline FolnerCertificate hr_to_folner(const FiniteGroup& g, const GeneratingSet& s,
                                      const GroupVector& f, int radius) {
  const auto support = f.support();
  if (support.empty()) throw DegenerateInput("hr_to_folner: f has empty support");
  std::vector<double> levels;
  for (Index p : support) levels.push_back(f.values[p]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double best_ratio = std::numeric_limits<double>::infinity();
  PointSet best;
  for (double level : levels) {
    PointSet f_t;
    for (Index p : support)
      if (f.values[p] >= level) f_t.push_back(p);
    const double r = folner_ratio(g, s, f_t, radius);
    if (r < best_ratio) {
      best_ratio = r;
      best = std::move(f_t);
    }
  }
  return make_folner_certificate(g, s, best, radius);
}

/// Minimizes Σ_{s∈S} ‖f − s·f‖₂² over unit vectors supported in the given
/// set via the smallest eigenvalue of the principal submatrix of
/// L = Σ_s (I − R_s)ᵀ(I − R_s). The support must be 1-connected in the word
/// metric so the Perron eigenvector is positive. Returns the minimizer and
/// its displacement max_s ‖f − s·f‖₂.
inline std::pair<GroupVector, double> optimal_hr_vector(const FiniteGroup& g,
                                                        const GeneratingSet& s,
                                                        const PointSet& support_in) {
  const PointSet support = normalize_point_set(support_in);
  if (support.empty()) throw EmptySet("optimal_hr_vector: empty support");
  // 1-connectivity in the word metric is adjacency under S ∪ S⁻¹.
  {
    std::vector<int> pos(g.order(), -1);
    for (size_t i = 0; i < support.size(); ++i) pos[support[i]] = static_cast<int>(i);
    std::vector<char> seen(support.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (Index gen : s.symmetrized) {
        const int j = pos[g.multiply(support[i], gen)];
        if (j >= 0 && !seen[j]) {
          seen[j] = 1;
          ++visited;
          stack.push_back(j);
        }
      }
    }
    if (visited != support.size())
      throw DisconnectedSupport(
          "optimal_hr_vector: support is not 1-connected in the word metric");
  }
  const int m = static_cast<int>(support.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[support[i]] = i;
  // L = Σ_s (2I − R_s − R_{s⁻¹}) restricted to the support.
  Eigen::MatrixXd l_sub = Eigen::MatrixXd::Zero(m, m);
  for (Index gen : s.generators) {
    for (int i = 0; i < m; ++i) {
      l_sub(i, i) += 2.0;
      const int j_fwd = pos[g.multiply(support[i], gen)];
      const int j_bwd = pos[g.multiply(support[i], g.inverse(gen))];
      if (j_fwd >= 0) l_sub(i, j_fwd) -= 1.0;
      if (j_bwd >= 0) l_sub(i, j_bwd) -= 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l_sub);
  if (solver.info() != Eigen::Success)
    throw EigensolveFailure("optimal_hr_vector: eigensolve did not converge");
  Eigen::VectorXd vec = solver.eigenvectors().col(0);
  if (vec.sum() < 0.0) vec = -vec;
  if (vec.minCoeff() < -1e-12)
    throw EigensolveFailure(
        "optimal_hr_vector: Perron eigenvector has a negative entry below tolerance");
  vec = vec.cwiseMax(0.0);
  vec.normalize();
  Eigen::VectorXd full = Eigen::VectorXd::Zero(g.order());
  for (int i = 0; i < m; ++i) full[support[i]] = vec[i];
  GroupVector f{&g, std::move(full), kFloatSupportEpsilon};
  return {f, displacement(f, s, 2)};
}

/// Pointwise cut f_c(x) = min{f(x), c}.
inline GroupVector cut_function(const GroupVector& f, double c) {
  if (c < 0.0) throw PreconditionViolated("cut_function: c must be nonnegative");
  return GroupVector{f.group, f.values.cwiseMin(c), f.support_epsilon};
}

/// Bisection for c with ‖f_c‖₂ = epsilon; F(c) = ‖min(f,c)‖₂ is continuous
/// and monotone, so the intermediate value always exists.
inline double find_cut_level(const GroupVector& f, double epsilon,
                             double tol = 1e-10, int max_iter = 200) {
  require_nonneg(f, "find_cut_level");
  const double total = lp_norm(f, 2);
  if (epsilon < 0.0 || epsilon > total + tol)
    throw TargetOutOfRange("find_cut_level: target " + std::to_string(epsilon) +
                           " exceeds ||f||_2 = " + std::to_string(total));
  if (epsilon == 0.0) return 0.0;
  const double top = f.values.maxCoeff();
  if (epsilon >= total) return top;
  double lo = 0.0, hi = top;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double norm_mid = f.values.cwiseMin(mid).norm();
    if (std::abs(norm_mid - epsilon) <= tol) return mid;
    (norm_mid < epsilon ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline HRCertificate make_hr_certificate(const GroupVector& f, const GeneratingSet& s) {
  HRCertificate cert;
  cert.f = f;
  cert.epsilon = displacement(f, s, 2);
  const auto support = f.support();
  cert.support_card = static_cast<int>(support.size());
  cert.l1_norm = lp_norm(f, 1);
  const auto len = detail::word_lengths(*f.group, s.symmetrized);
  cert.d_bound = detail::support_d_bound(len, support);
  return cert;
}

/// Support compression: with ε̂ = ε/(2+2ε), cut at the level with
/// ‖f_c‖₂ = ε̂ and renormalize the remainder. The output satisfies
/// ♯supp(h) <= M²/ε̂² and displacement(h) <= 2ε; both are asserted.
inline HRCertificate compress_support(const GroupVector& f, const GeneratingSet& s,
                                      double epsilon, double l1_bound) {
  require_nonneg(f, "compress_support");
  require_unit(f, 2, "compress_support");
  if (epsilon <= 0.0)
    throw PreconditionViolated("compress_support: epsilon must be positive");
  const double l1 = lp_norm(f, 1);
  if (l1 > l1_bound + 1e-9)
    throw PreconditionViolated("compress_support: ||f||_1 = " + std::to_string(l1) +
                               " exceeds M = " + std::to_string(l1_bound));
  const double disp = displacement(f, s, 2);
  if (disp > epsilon + 1e-9)
    throw PreconditionViolated("compress_support: displacement " + std::to_string(disp) +
                               " exceeds epsilon = " + std::to_string(epsilon));
  const double eps_hat = epsilon / (2.0 + 2.0 * epsilon);
  const double c = find_cut_level(f, eps_hat);
  const GroupVector g_vec = cut_function(f, c);
  Eigen::VectorXd rest = f.values - g_vec.values;
  const double rest_norm = rest.norm();
  if (rest_norm <= 0.0)
    throw AssertionFailed("compress_support: f - f_c vanished (cut level reached max f)");
  GroupVector h{f.group, rest / rest_norm, kFloatSupportEpsilon};
  const double support_cap = l1_bound * l1_bound / (eps_hat * eps_hat);
  const int support_card = static_cast<int>(h.support().size());
  if (support_card > static_cast<long long>(std::ceil(support_cap)))
    throw AssertionFailed("compress_support: support bound violated: " +
                          std::to_string(support_card) + " > " +
                          std::to_string(support_cap));
  const double h_disp = displacement(h, s, 2);
  if (h_disp > 2.0 * epsilon + 1e-9)
    throw AssertionFailed("compress_support: displacement bound violated: " +
                          std::to_string(h_disp) + " > 2*epsilon");
  return make_hr_certificate(h, s);
}

/// Component packing: translates the 2-connected components of supp(f) onto
/// well-spaced waypoints of a geodesic from the identity, landing the support
/// inside B(e, 4(N+2)N). Falls back to the uniform vector when the group is
/// small enough, with displacement exactly 0.
inline HRCertificate pack_components(const GroupVector& f, const GeneratingSet& s,
                                     double epsilon, int support_cap) {
  require_nonneg(f, "pack_components");
  require_unit(f, 2, "pack_components");
  const FiniteGroup& g = *f.group;
  const long long n_cap = support_cap;
  const auto support = f.support();
  if (static_cast<long long>(support.size()) > n_cap)
    throw PreconditionViolated("pack_components: support exceeds N = " +
                               std::to_string(support_cap));
  const double input_disp = displacement(f, s, 2);
  if (input_disp > epsilon + 1e-9)
    throw PreconditionViolated("pack_components: displacement exceeds epsilon");

  const auto len = detail::word_lengths(g, s.symmetrized);
  const int diam = *std::max_element(len.begin(), len.end());
  const long long uniform_threshold = 4 * (n_cap + 1) * n_cap;
  if (diam <= uniform_threshold) {
    PointSet whole(g.order());
    std::iota(whole.begin(), whole.end(), 0);
    return make_hr_certificate(normalized_indicator(g, whole), s);
  }

  auto dist = [&](Index a, Index b) { return len[g.multiply(g.inverse(a), b)]; };

  // 2-connected components of the support, sorted by minimal point index.
  std::vector<PointSet> components;
  {
    std::vector<char> assigned(support.size(), 0);
    for (size_t seed = 0; seed < support.size(); ++seed) {
      if (assigned[seed]) continue;
      PointSet comp{support[seed]};
      assigned[seed] = 1;
      for (size_t head = 0; head < comp.size(); ++head)
        for (size_t j = 0; j < support.size(); ++j)
          if (!assigned[j] && dist(comp[head], support[j]) <= 2) {
            assigned[j] = 1;
            comp.push_back(support[j]);
          }
      components.push_back(normalize_point_set(std::move(comp)));
    }
    std::sort(components.begin(), components.end(),
              [](const PointSet& a, const PointSet& b) { return a.front() < b.front(); });
  }

  // Anchors: minimal support point of each component; 2-connectivity with
  // at most N points keeps each component inside B(anchor, 2N).
  for (const auto& comp : components) {
    const Index anchor = comp.front();
    for (Index p : comp)
      if (dist(anchor, p) > 2 * support_cap)
        throw AssertionFailed("pack_components: component escapes B(anchor, 2N)");
  }

  // Geodesic from the identity towards an element at distance 4(N+1)N, via
  // BFS parent pointers.
  Index beta = -1;
  for (Index p = 0; p < g.order(); ++p)
    if (len[p] == uniform_threshold) {
      beta = p;
      break;
    }
  if (beta < 0)
    throw GeodesicNotFound("pack_components: no element at exact distance " +
                           std::to_string(uniform_threshold));
  std::vector<Index> parent(g.order(), -1);
  {
    std::deque<Index> queue{g.identity()};
    std::vector<char> seen(g.order(), 0);
    seen[g.identity()] = 1;
    while (!queue.empty()) {
      const Index x = queue.front();
      queue.pop_front();
      for (Index gen : s.symmetrized) {
        const Index y = g.multiply(x, gen);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<Index> geodesic;  // identity first
  for (Index p = beta; p != -1; p = parent[p]) geodesic.push_back(p);
  std::reverse(geodesic.begin(), geodesic.end());

  const long long spacing = 4 * (n_cap + 1);
  Eigen::VectorXd packed = Eigen::VectorXd::Zero(g.order());
  std::vector<PointSet> translated;
  for (size_t k = 0; k < components.size(); ++k) {
    const long long offset = spacing * static_cast<long long>(k);
    if (offset >= static_cast<long long>(geodesic.size()))
      throw GeodesicNotFound("pack_components: geodesic too short for waypoint " +
                             std::to_string(k));
    const Index waypoint = geodesic[static_cast<size_t>(offset)];
    const Index anchor = components[k].front();
    const Index gamma = g.multiply(waypoint, g.inverse(anchor));
    Eigen::VectorXd piece = Eigen::VectorXd::Zero(g.order());
    for (Index p : components[k]) piece[p] = f.values[p];
    const GroupVector moved =
        left_translate(GroupVector{&g, std::move(piece), f.support_epsilon}, gamma);
    packed += moved.values;
    PointSet image;
    for (Index p : components[k]) image.push_back(g.multiply(gamma, p));
    translated.push_back(normalize_point_set(std::move(image)));
  }

  for (size_t k = 0; k < translated.size(); ++k)
    for (size_t l = k + 1; l < translated.size(); ++l)
      for (Index p : translated[k])
        for (Index q : translated[l])
          if (dist(p, q) < 3)
            throw AssertionFailed(
                "pack_components: translated components closer than 3 apart");

  GroupVector out{&g, std::move(packed), f.support_epsilon};
  if (std::abs(lp_norm(out, 2) - 1.0) > 1e-12)
    throw AssertionFailed("pack_components: output is not unit l2");
  const double out_disp = displacement(out, s, 2);
  if (out_disp > input_disp + 1e-9)
    throw AssertionFailed("pack_components: displacement increased");
  const long long target_radius = 4 * (n_cap + 2) * n_cap;
  for (Index p : out.support())
    if (len[p] > target_radius)
      throw AssertionFailed("pack_components: support escapes B(e, 4(N+2)N)");
  return make_hr_certificate(out, s);
}

struct MemberCheckRow {
  int member_index = 0;
  double norm_error = 0.0;
  double min_entry = 0.0;
  double displacement = 0.0;
  int support_card = 0;
  double l1_norm = 0.0;
  int d_bound = 0;
  bool pass = false;
  std::string failure;
};

struct UniformAmenabilityReport {
  std::vector<MemberCheckRow> rows;
  bool pass = false;
};

/// Verifies a family of Hulanicki-Reiter certificates against common (ε, D).
inline UniformAmenabilityReport check_uniform_amenability_certificate(
    const FamilySpec& family, const std::vector<HRCertificate>& certs, double epsilon,
    int d_bound) {
  if (family.members.size() != certs.size())
    throw FamilyMismatch("check_uniform_amenability_certificate: " +
                         std::to_string(family.members.size()) + " members vs " +
                         std::to_string(certs.size()) + " certificates");
  UniformAmenabilityReport report;
  report.pass = true;
  for (size_t i = 0; i < certs.size(); ++i) {
    const auto& member = family.members[i];
    const auto& cert = certs[i];
    MemberCheckRow row;
    row.member_index = static_cast<int>(i);
    if (cert.f.group != &member.group)
      throw FamilyMismatch("check_uniform_amenability_certificate: certificate " +
                           std::to_string(i) + " is not on member group " +
                           std::to_string(i));
    const GeneratingSet s = make_generating_set(member.group, member.generators);
    row.norm_error = std::abs(lp_norm(cert.f, 2) - 1.0);
    row.min_entry = cert.f.values.minCoeff();
    row.displacement = displacement(cert.f, s, 2);
    const auto support = cert.f.support();
    row.support_card = static_cast<int>(support.size());
    row.l1_norm = lp_norm(cert.f, 1);
    const auto len = detail::word_lengths(member.group, s.symmetrized);
    row.d_bound = detail::support_d_bound(len, support);
    row.pass = true;
    if (row.norm_error > 1e-9) {
      row.pass = false;
      row.failure = "not unit l2";
    } else if (row.min_entry < 0.0) {
      row.pass = false;
      row.failure = "negative entry";
    } else if (row.displacement > epsilon + 1e-12) {
      row.pass = false;
      row.failure = "displacement exceeds epsilon";
    } else if (row.d_bound > d_bound) {
      row.pass = false;
      row.failure = "support escapes B(e,D)";
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ua

#endif  // UA_CERTIFICATES_HPP
