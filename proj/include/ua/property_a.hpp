#ifndef UA_PROPERTY_A_HPP
#define UA_PROPERTY_A_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ua/certificates.hpp"
#include "ua/errors.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"

namespace ua {

/// A Higson-Roe map x ↦ ξ(x): columns of `xi` are unit nonnegative ℓ²
/// vectors over the points of `space`, each supported in B(x, d_bound).
struct HigsonRoeMap {
  FiniteMetricSpace space;
  Eigen::MatrixXd xi;  // column x is ξ(x)
  int d_bound = 0;
  double support_epsilon = 0.0;
};

/// max over pairs with d(x,y) <= R of ‖ξ(x) − ξ(y)‖₂, by exact pair
/// enumeration.
inline double variation(const HigsonRoeMap& map, int radius) {
  double worst = 0.0;
  const int n = map.space.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int d = map.space.dist(x, y);
      if (d == kInfiniteDistance || d > radius) continue;
      worst = std::max(worst, (map.xi.col(x) - map.xi.col(y)).norm());
    }
  return worst;
}

/// Hulanicki-Reiter vector to Higson-Roe map via the left/right bridge:
/// ξ(x)(h) = f̌(x⁻¹h) = f(h⁻¹x), so supp(ξ(x)) = x·supp(f̌) ⊆ B(x,D) and
/// variation(ξ,1) equals the symmetrized displacement of f.
inline HigsonRoeMap hr_to_higson_roe(const FiniteGroup& g, const GeneratingSet& s,
                                     const GroupVector& f, int d_bound) {
  require_nonneg(f, "hr_to_higson_roe");
  require_unit(f, 2, "hr_to_higson_roe");
  const auto len = detail::word_lengths(g, s.symmetrized);
  for (Index p : f.support())
    if (len[p] > d_bound)
      throw SupportViolation("hr_to_higson_roe: supp(f) escapes B(e," +
                             std::to_string(d_bound) + ") at element " +
                             std::to_string(p));
  const int n = g.order();
  Eigen::MatrixXd xi(n, n);
  for (Index x = 0; x < n; ++x)
    for (Index h = 0; h < n; ++h) xi(h, x) = f.values[g.multiply(g.inverse(h), x)];
  HigsonRoeMap map{word_metric(g, s), std::move(xi), d_bound, f.support_epsilon};
  for (Index x = 0; x < n; ++x)
    for (Index h = 0; h < n; ++h)
      if (std::abs(map.xi(h, x)) > map.support_epsilon &&
          map.space.dist(x, h) > d_bound)
        throw SupportViolation("hr_to_higson_roe: supp(xi(" + std::to_string(x) +
                               ")) escapes B(x,D)");
  return map;
}

struct PropertyAReport {
  double variation = 0.0;
  int worst_pair_x = -1, worst_pair_y = -1;
  int worst_support_point = -1;  // point whose support escapes, if any
  bool pass = false;
};

inline PropertyAReport check_property_a_certificate(const HigsonRoeMap& map,
                                                    double epsilon, int radius,
                                                    int d_bound) {
  PropertyAReport report;
  const int n = map.space.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int d = map.space.dist(x, y);
      if (d == kInfiniteDistance || d > radius) continue;
      const double v = (map.xi.col(x) - map.xi.col(y)).norm();
      if (v > report.variation) {
        report.variation = v;
        report.worst_pair_x = x;
        report.worst_pair_y = y;
      }
    }
  bool supports_ok = true;
  for (int x = 0; x < n && supports_ok; ++x)
    for (int h = 0; h < n; ++h)
      if (std::abs(map.xi(h, x)) > map.support_epsilon && map.space.dist(x, h) > d_bound) {
        supports_ok = false;
        report.worst_support_point = x;
        break;
      }
  report.pass = report.variation <= epsilon && supports_ok;
  return report;
}

/// A_x ⊆ X×ℕ encoded as multiplicity counts over points; Δ and ∩ are the
/// corresponding multiset operations.
struct SetFamilyCertificate {
  FiniteMetricSpace space;
  std::vector<std::vector<std::int64_t>> counts;  // counts[x][p] = multiplicity
  int s_bound = 0;
};

struct SetFamilyReport {
  double worst_ratio = 0.0;
  int worst_pair_x = -1, worst_pair_y = -1;
  bool supports_ok = true;
  bool pass = false;
};

inline SetFamilyReport check_setfamily_certificate(const SetFamilyCertificate& cert,
                                                   double epsilon, int radius,
                                                   int s_bound) {
  const int n = cert.space.size();
  if (static_cast<int>(cert.counts.size()) != n)
    throw FamilyMismatch("check_setfamily_certificate: one multiset per point required");
  SetFamilyReport report;
  for (int x = 0; x < n; ++x) {
    std::int64_t total = 0;
    for (int p = 0; p < n; ++p) {
      if (cert.counts[x][p] < 0)
        throw PreconditionViolated("check_setfamily_certificate: negative multiplicity");
      total += cert.counts[x][p];
      if (cert.counts[x][p] > 0 && cert.space.dist(x, p) > s_bound)
        report.supports_ok = false;
    }
    if (total == 0)
      throw EmptyFamilyMember("check_setfamily_certificate: A_" + std::to_string(x) +
                              " is empty");
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int d = cert.space.dist(x, y);
      if (d == kInfiniteDistance || d > radius) continue;
      std::int64_t sym_diff = 0, intersection = 0;
      for (int p = 0; p < n; ++p) {
        sym_diff += std::abs(cert.counts[x][p] - cert.counts[y][p]);
        intersection += std::min(cert.counts[x][p], cert.counts[y][p]);
      }
      if (intersection == 0)
        throw DisjointSets("check_setfamily_certificate: A_" + std::to_string(x) +
                           " and A_" + std::to_string(y) + " are disjoint");
      const double ratio =
          static_cast<double>(sym_diff) / static_cast<double>(intersection);
      if (ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        report.worst_pair_x = x;
        report.worst_pair_y = y;
      }
    }
  report.pass = report.worst_ratio <= epsilon && report.supports_ok;
  return report;
}

/// Quantizes an ℓ¹ Higson-Roe map into a set-family certificate: A_x gets
/// multiplicity round(Q·ξ(x)(p)) at p. Supports shrink or persist, never
/// grow.
inline SetFamilyCertificate l1_to_setfamily(const FiniteMetricSpace& space,
                                            const Eigen::MatrixXd& xi_l1, int quantum,
                                            int s_bound) {
  if (quantum < 1) throw PreconditionViolated("l1_to_setfamily: Q must be >= 1");
  const int n = space.size();
  SetFamilyCertificate cert{space, {}, s_bound};
  cert.counts.assign(n, std::vector<std::int64_t>(n, 0));
  for (int x = 0; x < n; ++x) {
    std::int64_t total = 0;
    for (int p = 0; p < n; ++p) {
      const auto m = static_cast<std::int64_t>(std::llround(quantum * xi_l1(p, x)));
      cert.counts[x][p] = m;
      total += m;
    }
    if (total == 0)
      throw AllZero("l1_to_setfamily: quantization annihilated A_" + std::to_string(x) +
                    " (Q too small)");
  }
  return cert;
}

struct CounterexampleRow {
  int member_index = 0;
  int group_order = 0;
  double trivial_variation = 0.0;  // of the constant delta map; always 0
  double trivial_l1 = 0.0;         // always 1
  double epsilon_star = 0.0;       // optimal displacement over B(e, D_probe)
  double spectral_lower_bound = 0.0;
  double ball_fraction = 0.0;
};

namespace detail {

inline CounterexampleRow counterexample_member(const FamilyMember& member, int d_probe,
                                               int index) {
  const FiniteGroup& g = member.group;
  const GeneratingSet s = make_generating_set(g, member.generators);
  CounterexampleRow row;
  row.member_index = index;
  row.group_order = g.order();

  // (a) the constant map ξ(x) ≡ δ_e: trivially bounded l1 Higson-Roe data.
  {
    const int n = g.order();
    Eigen::MatrixXd xi = Eigen::MatrixXd::Zero(n, n);
    xi.row(g.identity()).setOnes();
    FiniteMetricSpace metric = word_metric(g, s);
    const int diam = metric.diameter();
    HigsonRoeMap constant_map{std::move(metric), std::move(xi), diam, 0.0};
    row.trivial_variation = variation(constant_map, 1);
    row.trivial_l1 = constant_map.xi.col(0).lpNorm<1>();
  }

  // (b) the true obstruction: the optimal vector supported in B(e, D_probe).
  const auto len = word_lengths(g, s.symmetrized);
  PointSet probe_ball;
  for (Index p = 0; p < g.order(); ++p)
    if (len[p] != kInfiniteDistance && len[p] <= d_probe) probe_ball.push_back(p);
  row.epsilon_star = optimal_hr_vector(g, s, probe_ball).second;
  row.ball_fraction = static_cast<double>(probe_ball.size()) / g.order();

  // (c) spectral lower bound from the per-generator averaged displacement
  // form (1/♯S)·Σ_s (I−R_s)ᵀ(I−R_s): any unit vector on the ball satisfies
  // ε*² >= λ₁·(1 − ♯B/♯G) with λ₁ its second-smallest eigenvalue.
  {
    const int n = g.order();
    Eigen::MatrixXd form = Eigen::MatrixXd::Zero(n, n);
    for (Index gen : s.generators) {
      for (Index h = 0; h < n; ++h) {
        form(h, h) += 2.0;
        form(h, g.multiply(h, gen)) -= 1.0;
        form(h, g.multiply(h, g.inverse(gen))) -= 1.0;
      }
    }
    form /= static_cast<double>(s.generators.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(form, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw EigensolveFailure("counterexample_demo: displacement form eigensolve failed");
    const double lambda1 = solver.eigenvalues()[1];
    row.spectral_lower_bound = lambda1 * (1.0 - row.ball_fraction);
  }
  return row;
}

}  // namespace detail

struct CounterexampleReport {
  std::vector<CounterexampleRow> rows;
  bool spectral_bound_holds = true;  // ε*² >= bound − 1e−9 on every member
};

/// Reproduces the counterexample pattern: constant delta maps give perfect
/// (variation 0, ℓ¹-norm 1) Higson-Roe data on every member, while the
/// optimal displacement over a fixed probe ball stays bounded below by the
/// spectral gap term.
inline CounterexampleReport counterexample_demo(const FamilySpec& family, int d_probe) {
  if (family.members.empty()) throw EmptySet("counterexample_demo: empty family");
  const size_t gen_count = family.members.front().generators.size();
  for (const auto& m : family.members)
    if (m.generators.size() != gen_count)
      throw FamilyMismatch(
          "counterexample_demo: members must share a common number of generators");
  CounterexampleReport report;
  report.rows.resize(family.members.size());
  for (size_t i = 0; i < family.members.size(); ++i)
    report.rows[i] =
        detail::counterexample_member(family.members[i], d_probe, static_cast<int>(i));
  for (const auto& row : report.rows)
    if (row.epsilon_star * row.epsilon_star < row.spectral_lower_bound - 1e-9)
      report.spectral_bound_holds = false;
  return report;
}

}  // namespace ua

#endif  // UA_PROPERTY_A_HPP
