// Acceptance suite: one pass/fail line per criterion. argv[1] is the shipped
// data directory.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ua/certificates.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"
#include "ua/io.hpp"
#include "ua/operators.hpp"
#include "ua/property_a.hpp"

using namespace ua;

namespace {

Eigen::MatrixXi cyclic_table(int n) {
  Eigen::MatrixXi t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = (a + b) % n;
  return t;
}

FiniteGroup cyclic_group(int n) { return build_group_from_table(cyclic_table(n)); }

/// Random f with entries in [0,1] and l1 norm at most 3.
GroupVector random_kernel_function(const FiniteGroup& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.order());
  for (int i = 0; i < std::min(8, g.order()); ++i) v[pick(rng)] = unif(rng);
  const double l1 = v.lpNorm<1>();
  if (l1 > 3.0) v *= 3.0 / l1;
  return GroupVector{&g, std::move(v), 1e-14};
}

GroupVector random_unit_vector(const FiniteGroup& g, std::mt19937_64& rng,
                               int max_support = 0) {
  const int n = g.order();
  const int card = max_support > 0 ? std::min(max_support, n) : n;
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < card; ++i) v[points[i]] = unif(rng);
  v.normalize();
  return GroupVector{&g, std::move(v), 1e-14};
}

// --------------------------------------------------------------------------

bool criterion_1_norm_identity() {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  groups.emplace_back("Z/8", cyclic_group(8));
  groups.emplace_back("Z/60", cyclic_group(60));
  // S3 x Z/5, order 30, as permutations on 8 letters
  auto mixed = build_group_from_permutations(
      {{1, 0, 2, 3, 4, 5, 6, 7}, {1, 2, 0, 3, 4, 5, 6, 7}, {0, 1, 2, 4, 5, 6, 7, 3}});
  if (mixed.group.order() != 30) return false;
  groups.emplace_back("S3xZ5", std::move(mixed.group));

  std::mt19937_64 rng(0x5eed);
  for (const auto& [name, g] : groups) {
    for (int t = 0; t < 50; ++t) {
      const GroupVector f = random_kernel_function(g, rng);
      const double l1 = lp_norm(f, 1);
      const OperatorHandle handle(f);
      const double dense = operator_norm(handle, NormMethod::dense_eig);
      const double power = operator_norm(handle, NormMethod::power_iteration);
      if (std::abs(dense - l1 * l1) / (l1 * l1) > 1e-8) return false;
      if (std::abs(power - dense) / dense > 1e-7) return false;
    }
  }
  return true;
}

bool criterion_2_realizations() {
  const FiniteGroup g = cyclic_group(24);
  std::mt19937_64 rng(0x5eed + 1);
  for (int t = 0; t < 200; ++t) {
    const GroupVector f = random_kernel_function(g, rng);
    const GroupVector alpha = random_unit_vector(g, rng);
    const OperatorHandle dense(f, ApplyMode::dense_kernel);
    const OperatorHandle conv(f, ApplyMode::convolution);
    const GroupVector via_dense = apply_T(dense, alpha);
    const GroupVector via_conv = apply_T(conv, alpha);
    if ((via_dense.values - via_conv.values).lpNorm<Eigen::Infinity>() > 1e-10)
      return false;
    const double quad = alpha.values.dot(via_dense.values);
    const double conv_norm = lp_norm(convolve(alpha, f), 2);
    if (std::abs(quad - conv_norm * conv_norm) > 1e-10) return false;
  }
  return true;
}

bool criterion_3_cut_lemma() {
  const FiniteGroup g = cyclic_group(50);
  std::mt19937_64 rng(0x5eed + 2);
  std::uniform_real_distribution<double> target(0.0, 1.0);
  std::uniform_int_distribution<int> card(1, 20);
  for (int t = 0; t < 100; ++t) {
    const GroupVector f = random_unit_vector(g, rng, card(rng));
    const double eps = target(rng);
    const double c = find_cut_level(f, eps);
    if (std::abs(lp_norm(cut_function(f, c), 2) - eps) > 1e-10) return false;
  }
  // uniform closed form: c = eps/sqrt(n)
  for (int n : {4, 9, 25, 49}) {
    const FiniteGroup gu = cyclic_group(n);
    PointSet whole(n);
    std::iota(whole.begin(), whole.end(), 0);
    const GroupVector u = normalized_indicator(gu, whole);
    for (double eps : {0.1, 0.33, 0.5, 0.9}) {
      const double c = find_cut_level(u, eps);
      if (std::abs(c - eps / std::sqrt(static_cast<double>(n))) > 1e-10) return false;
    }
  }
  return true;
}

bool criterion_4_compression() {
  const FiniteGroup g = cyclic_group(200);
  const GeneratingSet s = make_generating_set(g, {1});
  std::mt19937_64 rng(0x5eed + 3);
  std::uniform_int_distribution<int> length(2, 50);
  std::uniform_int_distribution<int> start(0, 199);
  for (int t = 0; t < 100; ++t) {
    // interval indicators: condition (1) holds with the exact (eps, M) below
    const int k = length(rng);
    PointSet interval;
    for (int i = 0; i < k; ++i) interval.push_back((start(rng) + i) % 200);
    const GroupVector f = normalized_indicator(g, normalize_point_set(interval));
    const double eps = displacement(f, s, 2);
    const double m = lp_norm(f, 1);
    const HRCertificate h = compress_support(f, s, eps, m);
    const double eps_hat = eps / (2.0 + 2.0 * eps);
    if (h.support_card > std::ceil(m * m / (eps_hat * eps_hat))) return false;
    if (displacement(h.f, s, 2) > 2.0 * eps + 1e-9) return false;
  }
  return true;
}

bool criterion_5_packing() {
  const FiniteGroup g = cyclic_group(2000);
  const GeneratingSet s = make_generating_set(g, {1});
  std::mt19937_64 rng(0x5eed + 4);
  std::uniform_real_distribution<double> unif(0.3, 1.0);
  const int n_cap = 5;
  for (int t = 0; t < 10; ++t) {
    // two components of 3 and 2 consecutive points, far apart
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2000);
    const int a = 100 + 17 * t, b = 900 + 31 * t;
    for (int i = 0; i < 3; ++i) v[a + i] = unif(rng);
    for (int i = 0; i < 2; ++i) v[b + i] = unif(rng);
    v.normalize();
    const GroupVector f{&g, std::move(v), 1e-14};
    const double eps_in = displacement(f, s, 2);
    const HRCertificate packed = pack_components(f, s, eps_in, n_cap);
    if (std::abs(lp_norm(packed.f, 2) - 1.0) > 1e-12) return false;
    if (displacement(packed.f, s, 2) > eps_in + 1e-9) return false;
    // recomputed word lengths: on Z/2000 with S={1}, len(p) = min(p, 2000-p)
    const int radius = 4 * (n_cap + 2) * n_cap;  // 140
    for (Index p : packed.f.support())
      if (std::min(p, 2000 - p) > radius) return false;
  }
  // uniform branch: diam <= 4(N+1)N gives displacement exactly 0
  {
    const FiniteGroup small = cyclic_group(30);
    const GeneratingSet ss = make_generating_set(small, {1});
    const GroupVector f = normalized_indicator(small, {0, 1, 2});
    const HRCertificate packed = pack_components(f, ss, 1.0, n_cap);
    if (packed.epsilon != 0.0) return false;
  }
  return true;
}

bool criterion_6_quant_chain(const std::string& data_dir) {
  const QuantChain spot = quantitative_chain(1.0, 2.0);
  if (spot.stage2_support_cap() != 64.0) return false;
  if (spot.stage3_radius() != 16896.0) return false;

  const FamilySpec family = io::read_family_manifest(data_dir + "/zn_family.txt");
  const double epsilon = 0.7;
  for (const auto& member : family.members) {
    const FiniteGroup& g = member.group;
    const GeneratingSet s = make_generating_set(g, member.generators);
    const auto len = detail::word_lengths(g, s.symmetrized);
    const int diam = *std::max_element(len.begin(), len.end());
    HRCertificate stage1;
    for (int d = 0; d <= diam; ++d) {
      PointSet ball_set;
      for (Index p = 0; p < g.order(); ++p)
        if (len[p] <= d) ball_set.push_back(p);
      stage1 = make_hr_certificate(normalized_indicator(g, ball_set), s);
      if (stage1.epsilon <= epsilon) break;
    }
    const double m = std::max(1.0, stage1.l1_norm);
    const QuantChain chain = quantitative_chain(epsilon, m);
    const HRCertificate stage2 = compress_support(stage1.f, s, epsilon, m);
    if (stage2.epsilon > chain.stage2_epsilon() + 1e-9) return false;
    if (stage2.support_card > std::ceil(chain.stage2_support_cap())) return false;
    const int n_cap = static_cast<int>(std::ceil(chain.stage2_support_cap()));
    const HRCertificate stage3 = pack_components(stage2.f, s, chain.stage3_epsilon(), n_cap);
    if (stage3.epsilon > chain.stage3_epsilon() + 1e-9) return false;
    if (stage3.d_bound > chain.stage3_radius()) return false;
  }
  return true;
}

bool criterion_7_cyclic_family() {
  const int d = 3;
  const double closed_form_sq = 2.0 / (2.0 * d + 1.0);
  for (int n = 10; n <= 200; ++n) {
    const FiniteGroup g = cyclic_group(n);
    const GeneratingSet s = make_generating_set(g, {1});
    const auto len = detail::word_lengths(g, s.symmetrized);
    PointSet ball_set;
    for (Index p = 0; p < n; ++p)
      if (len[p] <= d) ball_set.push_back(p);
    const HRCertificate cert = make_hr_certificate(normalized_indicator(g, ball_set), s);
    if (std::abs(cert.epsilon * cert.epsilon - closed_form_sq) > 1e-12) return false;
    const double optimal = optimal_hr_vector(g, s, ball_set).second;
    if (optimal > std::sqrt(closed_form_sq) + 1e-12) return false;
  }
  return true;
}

bool criterion_8_property_a_bridge() {
  const FiniteGroup g = cyclic_group(12);
  const GeneratingSet s = make_generating_set(g, {1});
  const int d_bound = 4;
  const auto len = detail::word_lengths(g, s.symmetrized);
  std::mt19937_64 rng(0x5eed + 5);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  for (int t = 0; t < 50; ++t) {
    // random nonneg unit vector supported in B(e, d_bound)
    Eigen::VectorXd v = Eigen::VectorXd::Zero(12);
    for (Index p = 0; p < 12; ++p)
      if (len[p] <= d_bound && unif(rng) > 0.4) v[p] = unif(rng);
    if (v.norm() == 0.0) v[0] = 1.0;
    v.normalize();
    const GroupVector f{&g, std::move(v), 1e-14};
    const HigsonRoeMap map = hr_to_higson_roe(g, s, f, d_bound);
    // supports exactly x * supp(involute(f))
    const PointSet fc_support = involute(f).support();
    for (int x = 0; x < 12; ++x) {
      PointSet expected;
      for (Index p : fc_support) expected.push_back(g.multiply(x, p));
      expected = normalize_point_set(expected);
      PointSet actual;
      for (int h = 0; h < 12; ++h)
        if (std::abs(map.xi(h, x)) > map.support_epsilon) actual.push_back(h);
      if (actual != expected) return false;
      for (int h : actual)
        if (map.space.dist(x, h) > d_bound) return false;
    }
    if (std::abs(variation(map, 1) - displacement(f, s, 2, true)) > 1e-12) return false;
    // Mazur round trip
    const GroupVector back = mazur_1_to_2(mazur_2_to_1(f));
    if ((back.values - f.values).lpNorm<Eigen::Infinity>() > 1e-12) return false;
    if (back.support() != f.support()) return false;
  }
  return true;
}

bool criterion_9_counterexample(const std::string& data_dir) {
  const auto start = std::chrono::steady_clock::now();
  const FamilySpec family = io::read_family_manifest(data_dir + "/sl2_family.txt");
  const CounterexampleReport report = counterexample_demo(family, 3);
  for (const auto& row : report.rows) {
    if (row.trivial_variation != 0.0) return false;
    if (row.trivial_l1 != 1.0) return false;
  }
  if (!report.spectral_bound_holds) return false;
  // the smallest member comes first in the shipped manifest
  double smallest_eps = report.rows.front().epsilon_star;
  int smallest_order = report.rows.front().group_order;
  for (const auto& row : report.rows)
    if (row.group_order < smallest_order) {
      smallest_order = row.group_order;
      smallest_eps = row.epsilon_star;
    }
  for (const auto& row : report.rows)
    if (row.epsilon_star < 0.5 * smallest_eps) return false;

  // cyclic control family: epsilon_star is constant in n
  const FamilySpec control = io::read_family_manifest(data_dir + "/zn_family.txt");
  const CounterexampleReport control_report = counterexample_demo(control, 3);
  for (const auto& row : control_report.rows)
    if (std::abs(row.epsilon_star - control_report.rows.front().epsilon_star) > 1e-12)
      return false;

  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 300;
}

bool criterion_10_exact_combinatorics() {
  std::vector<std::pair<FiniteGroup, std::vector<Index>>> groups;
  for (int n : {2, 3, 5, 8, 12, 16, 20}) groups.emplace_back(cyclic_group(n), std::vector<Index>{1});
  {
    auto s3 = build_group_from_permutations({{1, 0, 2}, {1, 2, 0}});
    groups.emplace_back(std::move(s3.group), std::move(s3.generators));
  }
  {
    // dihedral group of order 10
    auto d5 = build_group_from_permutations({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
    if (d5.group.order() != 10) return false;
    groups.emplace_back(std::move(d5.group), std::move(d5.generators));
  }
  std::mt19937_64 rng(0x5eed + 6);
  for (const auto& [g, gens] : groups) {
    const GeneratingSet s = make_generating_set(g, gens);
    const FiniteMetricSpace x = word_metric(g, s);
    const int n = g.order();
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int radius : {1, 2}) {
      for (int t = 0; t < 20; ++t) {
        PointSet f;
        const int card = 1 + pick(rng) % std::max(1, n - 1);
        for (int i = 0; i < card; ++i) f.push_back(pick(rng));
        f = normalize_point_set(f);
        // brute-force boundary count from the metric matrix
        long long boundary = 0;
        for (int p = 0; p < n; ++p) {
          if (std::binary_search(f.begin(), f.end(), p)) continue;
          for (int q : f)
            if (x.dist(p, q) <= radius) {
              ++boundary;
              break;
            }
        }
        const double expected = static_cast<double>(boundary) / static_cast<double>(f.size());
        if (folner_ratio(g, s, f, radius) != expected) return false;
      }
    }
    // set-family ratios: random multisets vs brute force
    if (n < 2) continue;
    SetFamilyCertificate cert{x, {}, x.diameter()};
    cert.counts.assign(n, std::vector<std::int64_t>(n, 1));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) cert.counts[p][q] = 1 + pick(rng) % 4;
    const SetFamilyReport report =
        check_setfamily_certificate(cert, 1e18, x.diameter(), x.diameter());
    double worst = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        long long diff = 0, inter = 0;
        for (int r = 0; r < n; ++r) {
          diff += std::llabs(cert.counts[p][r] - cert.counts[q][r]);
          inter += std::min(cert.counts[p][r], cert.counts[q][r]);
        }
        worst = std::max(worst, static_cast<double>(diff) / static_cast<double>(inter));
      }
    if (report.worst_ratio != worst) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance DATA_DIR\n";
    return 2;
  }
  const std::string data_dir = argv[1];

  struct Criterion {
    const char* name;
    bool (*fn)();
    bool (*fn_data)(const std::string&);
  };
  const Criterion criteria[] = {
      {"1 operator-norm identity", criterion_1_norm_identity, nullptr},
      {"2 realization equivalence", criterion_2_realizations, nullptr},
      {"3 cut lemma", criterion_3_cut_lemma, nullptr},
      {"4 compression contract", criterion_4_compression, nullptr},
      {"5 packing contract", criterion_5_packing, nullptr},
      {"6 quantitative chain", nullptr, criterion_6_quant_chain},
      {"7 cyclic-family amenability", criterion_7_cyclic_family, nullptr},
      {"8 property A bridge", criterion_8_property_a_bridge, nullptr},
      {"9 counterexample reproduction", nullptr, criterion_9_counterexample},
      {"10 exact combinatorics", criterion_10_exact_combinatorics, nullptr},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    std::string note;
    try {
      ok = c.fn ? c.fn() : c.fn_data(data_dir);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << note << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
