#ifndef UA_GROUP_FUNCTIONS_HPP
#define UA_GROUP_FUNCTIONS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "ua/errors.hpp"
#include "ua/group_core.hpp"

namespace ua {

/// Support threshold for vectors produced by floating-point arithmetic.
/// Exact constructions use 0 so support-cardinality claims stay honest.
inline constexpr double kFloatSupportEpsilon = 1e-14;

/// A real-valued function on a finite group with tracked support.
struct GroupVector {
  const FiniteGroup* group = nullptr;
  Eigen::VectorXd values;
  double support_epsilon = 0.0;

  std::vector<Index> support() const {
    std::vector<Index> out;
    for (Index i = 0; i < values.size(); ++i)
      if (std::abs(values[i]) > support_epsilon) out.push_back(i);
    return out;
  }
};

inline GroupVector make_vector(const FiniteGroup& g, Eigen::VectorXd values,
                               double support_epsilon = 0.0) {
  if (values.size() != g.order())
    throw GroupMismatch("make_vector: length does not match group order");
  return GroupVector{&g, std::move(values), support_epsilon};
}

inline GroupVector delta(const FiniteGroup& g, Index x) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.order());
  v[x] = 1.0;
  return GroupVector{&g, std::move(v), 0.0};
}

/// Normalized indicator χ_A / √♯A, a unit ℓ² vector.
inline GroupVector normalized_indicator(const FiniteGroup& g, const PointSet& a) {
  if (a.empty()) throw EmptySet("normalized_indicator: empty set");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.order());
  const double c = 1.0 / std::sqrt(static_cast<double>(a.size()));
  for (int p : a) v[p] = c;
  return GroupVector{&g, std::move(v), 0.0};
}

inline double lp_norm(const GroupVector& f, int p) {
  if (p == 1) return f.values.lpNorm<1>();
  if (p == 2) return f.values.norm();
  throw UnsupportedExponent("lp_norm: p must be 1 or 2, got " + std::to_string(p));
}

inline void require_nonneg(const GroupVector& f, const std::string& where) {
  if ((f.values.array() < 0.0).any())
    throw NegativeEntry(where + ": vector has a negative entry");
}

inline void require_unit(const GroupVector& f, int p, const std::string& where,
                         double tol = 1e-9) {
  const double n = lp_norm(f, p);
  if (std::abs(n - 1.0) > tol)
    throw NotUnitNorm(where + ": l" + std::to_string(p) + " norm is " +
                      std::to_string(n) + ", expected 1");
}

inline void require_same_group(const GroupVector& a, const GroupVector& b,
                               const std::string& where) {
  if (a.group != b.group) throw GroupMismatch(where + ": vectors live on different groups");
}

/// Right s-translation: (s·f)(h) = f(hs). An ℓᵖ isometry.
inline GroupVector right_translate(const GroupVector& f, Index s) {
  const FiniteGroup& g = *f.group;
  Eigen::VectorXd out(g.order());
  for (Index h = 0; h < g.order(); ++h) out[h] = f.values[g.multiply(h, s)];
  return GroupVector{&g, std::move(out), f.support_epsilon};
}

/// Left γ-translation: (γ⋆f)(h) = f(γ⁻¹h). An ℓᵖ isometry; commutes with
/// right translations.
inline GroupVector left_translate(const GroupVector& f, Index gamma) {
  const FiniteGroup& g = *f.group;
  const Index gi = g.inverse(gamma);
  Eigen::VectorXd out(g.order());
  for (Index h = 0; h < g.order(); ++h) out[h] = f.values[g.multiply(gi, h)];
  return GroupVector{&g, std::move(out), f.support_epsilon};
}

/// Involution f̌(γ) = f(γ⁻¹); bridges left and right displacement and
/// preserves word length of every support point.
inline GroupVector involute(const GroupVector& f) {
  const FiniteGroup& g = *f.group;
  Eigen::VectorXd out(g.order());
  for (Index x = 0; x < g.order(); ++x) out[x] = f.values[g.inverse(x)];
  return GroupVector{&g, std::move(out), f.support_epsilon};
}

/// Mazur map ℓ²₁,₊ → ℓ¹₁,₊: pointwise square. Support is preserved exactly.
inline GroupVector mazur_2_to_1(const GroupVector& f) {
  require_nonneg(f, "mazur_2_to_1");
  require_unit(f, 2, "mazur_2_to_1");
  return GroupVector{f.group, f.values.array().square().matrix(), f.support_epsilon};
}

/// Mazur map ℓ¹₁,₊ → ℓ²₁,₊: pointwise square root. Support is preserved
/// exactly.
inline GroupVector mazur_1_to_2(const GroupVector& f) {
  require_nonneg(f, "mazur_1_to_2");
  require_unit(f, 1, "mazur_1_to_2");
  return GroupVector{f.group, f.values.array().sqrt().matrix(), f.support_epsilon};
}

/// Group convolution (α∗f)(z) = Σ_x α(x) f(x⁻¹z).
inline GroupVector convolve(const GroupVector& alpha, const GroupVector& f) {
  require_same_group(alpha, f, "convolve");
  const FiniteGroup& g = *alpha.group;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    const double ax = alpha.values[x];
    if (ax == 0.0) continue;
    const Index xi = g.inverse(x);
    for (Index z = 0; z < g.order(); ++z) out[z] += ax * f.values[g.multiply(xi, z)];
  }
  return GroupVector{&g, std::move(out), kFloatSupportEpsilon};
}

/// max over s ∈ S (the generators as listed; symmetrized on request) of
/// ‖f − s·f‖_p.
inline double displacement(const GroupVector& f, const GeneratingSet& s, int p = 2,
                           bool symmetrized = false) {
  if (f.group != s.group)
    throw GroupMismatch("displacement: vector and generating set disagree on the group");
  if (p != 1 && p != 2)
    throw UnsupportedExponent("displacement: p must be 1 or 2");
  double worst = 0.0;
  const auto& gens = symmetrized ? s.symmetrized : s.generators;
  for (Index gen : gens) {
    const GroupVector shifted = right_translate(f, gen);
    const double d = p == 2 ? (f.values - shifted.values).norm()
                            : (f.values - shifted.values).lpNorm<1>();
    worst = std::max(worst, d);
  }
  return worst;
}

/// Ball variant: max over all γ with ℓ_S(γ) <= R of ‖f − γ·f‖_p.
inline double displacement_ball(const GroupVector& f, const GeneratingSet& s, int radius,
                                int p = 2) {
  if (f.group != s.group)
    throw GroupMismatch("displacement_ball: vector and generating set disagree");
  if (p != 1 && p != 2) throw UnsupportedExponent("displacement_ball: p must be 1 or 2");
  const auto len = detail::word_lengths(*f.group, s.symmetrized);
  double worst = 0.0;
  for (Index gamma = 0; gamma < f.group->order(); ++gamma) {
    if (len[gamma] == kInfiniteDistance || len[gamma] > radius || len[gamma] == 0)
      continue;
    const GroupVector shifted = right_translate(f, gamma);
    const double d = p == 2 ? (f.values - shifted.values).norm()
                            : (f.values - shifted.values).lpNorm<1>();
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace ua

#endif  // UA_GROUP_FUNCTIONS_HPP
