#ifndef UA_OPERATORS_HPP
#define UA_OPERATORS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "ua/errors.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"

namespace ua {

inline constexpr int kDenseEigOrderCap = 5000;

/// Gram matrix of left translates: K_f(x,y) = ⟨x⋆f, y⋆f⟩. Symmetric PSD with
/// constant diagonal ‖f‖₂².
struct KernelMatrix {
  const FiniteGroup* group = nullptr;
  Eigen::MatrixXd entries;
};

inline void require_kernel_range(const GroupVector& f, const std::string& where) {
  require_nonneg(f, where);
  if (f.values.maxCoeff() > 1.0 + 1e-12)
    throw EntryOutOfRange(where + ": entries must lie in [0,1], max is " +
                          std::to_string(f.values.maxCoeff()));
}

inline KernelMatrix kernel(const GroupVector& f) {
  require_kernel_range(f, "kernel");
  const FiniteGroup& g = *f.group;
  const int n = g.order();
  // Column x holds x⋆f; K = translatesᵀ · translates.
  Eigen::MatrixXd translates(n, n);
  for (Index x = 0; x < n; ++x) {
    const Index xi = g.inverse(x);
    for (Index h = 0; h < n; ++h) translates(h, x) = f.values[g.multiply(xi, h)];
  }
  Eigen::MatrixXd k = translates.transpose() * translates;
  k = 0.5 * (k + k.transpose().eval());
  return KernelMatrix{&g, std::move(k)};
}

enum class ApplyMode { dense_kernel, convolution };

/// The associated operator T_f realized two independent ways: dense
/// multiplication by K_f, or the convolution identity T_f α = (α∗f)∗f̌.
class OperatorHandle {
 public:
  explicit OperatorHandle(GroupVector f, ApplyMode mode = ApplyMode::convolution)
      : f_(std::move(f)), mode_(mode) {
    require_kernel_range(f_, "OperatorHandle");
    f_check_ = involute(f_);
    if (mode_ == ApplyMode::dense_kernel) kernel_ = kernel(f_).entries;
  }

  const GroupVector& function() const { return f_; }
  const FiniteGroup& group() const { return *f_.group; }
  ApplyMode mode() const { return mode_; }

  GroupVector apply(const GroupVector& alpha) const {
    if (alpha.group != f_.group)
      throw GroupMismatch("apply_T: operand lives on a different group");
    if (mode_ == ApplyMode::dense_kernel)
      return GroupVector{f_.group, kernel_ * alpha.values, kFloatSupportEpsilon};
    return convolve(convolve(alpha, f_), f_check_);
  }

 private:
  GroupVector f_;
  GroupVector f_check_;
  ApplyMode mode_;
  Eigen::MatrixXd kernel_;
};

inline GroupVector apply_T(const OperatorHandle& handle, const GroupVector& alpha) {
  return handle.apply(alpha);
}

enum class NormMethod { power_iteration, dense_eig };

/// Operator norm of T_f. The kernel is symmetric PSD, so the norm is the top
/// eigenvalue: power iteration from the all-ones vector (which overlaps the
/// Perron eigenvector of the nonnegative kernel), or a dense symmetric
/// eigensolve for orders up to 5000.
inline double operator_norm(const OperatorHandle& handle,
                            NormMethod method = NormMethod::power_iteration,
                            double rel_tol = 1e-10, int max_iter = 100000) {
  const int n = handle.group().order();
  if (method == NormMethod::dense_eig) {
    if (n > kDenseEigOrderCap)
      throw PreconditionViolated("operator_norm: order " + std::to_string(n) +
                                 " exceeds dense_eig cap " +
                                 std::to_string(kDenseEigOrderCap));
    const KernelMatrix k = kernel(handle.function());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.entries,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw EigensolveFailure("operator_norm: dense eigensolve failed");
    return solver.eigenvalues().maxCoeff();
  }
  GroupVector q{&handle.group(),
                Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))),
                kFloatSupportEpsilon};
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    GroupVector y = handle.apply(q);
    const double norm = lp_norm(y, 2);
    if (norm == 0.0) return 0.0;  // f itself was zero
    y.values /= norm;
    const double prev = lambda;
    lambda = norm;
    q = std::move(y);
    if (it > 0 && std::abs(lambda - prev) <= rel_tol * std::max(lambda, 1e-300))
      return lambda;
  }
  throw NoConvergence("operator_norm: power iteration did not converge; last estimate " +
                      std::to_string(lambda));
}

struct NormIdentityReport {
  double l1_norm_squared = 0.0;
  double dense_norm = 0.0;
  double power_norm = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  double method_rel_gap = 0.0;
  bool pass = false;
};

/// Checks ‖T_f‖ = ‖f‖₁² by both realizations; passes at 1e-8 relative on the
/// identity and 1e-7 between methods.
inline NormIdentityReport verify_norm_identity(const GroupVector& f) {
  require_kernel_range(f, "verify_norm_identity");
  NormIdentityReport report;
  const double l1 = lp_norm(f, 1);
  report.l1_norm_squared = l1 * l1;
  OperatorHandle handle(f, ApplyMode::convolution);
  report.dense_norm = operator_norm(handle, NormMethod::dense_eig);
  report.power_norm = operator_norm(handle, NormMethod::power_iteration);
  report.abs_gap = std::abs(report.dense_norm - report.l1_norm_squared);
  report.rel_gap =
      report.l1_norm_squared > 0.0 ? report.abs_gap / report.l1_norm_squared : report.abs_gap;
  report.method_rel_gap = std::abs(report.power_norm - report.dense_norm) /
                          std::max(report.dense_norm, 1e-300);
  report.pass = report.rel_gap <= 1e-8 && report.method_rel_gap <= 1e-7;
  return report;
}

}  // namespace ua

#endif  // UA_OPERATORS_HPP
