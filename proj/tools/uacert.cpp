// uacert: build groups, run certificate pipelines, and emit reports.
//
// Exit codes: 0 pass, 1 computed-check failure, 2 input/usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ua/certificates.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"
#include "ua/io.hpp"
#include "ua/operators.hpp"
#include "ua/property_a.hpp"

namespace {

using namespace ua;

struct LoadedGroup {
  FiniteGroup group;
  std::vector<Index> generators;
};

std::vector<Index> parse_gens(const std::string& spec) {
  std::vector<Index> gens;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    gens.push_back(io::detail::parse_int(io::detail::strip(tok), "uacert --gens"));
  return gens;
}

/// Loads a group from either file format, detected by the header line.
LoadedGroup load_group(const std::string& path, const std::string& gens_spec) {
  std::ifstream in(path);
  if (!in) throw ParseError("uacert: cannot open group file '" + path + "'");
  std::string header;
  std::getline(in, header);
  header = io::detail::strip(header);
  in.close();
  if (header.rfind("degree=", 0) == 0) {
    auto result = build_group_from_permutations(io::read_permutations(path));
    return LoadedGroup{std::move(result.group), std::move(result.generators)};
  }
  if (header.rfind("order=", 0) == 0) {
    if (gens_spec.empty())
      throw ParseError("uacert: table groups need --gens i,j,... to fix generators");
    return LoadedGroup{build_group_from_table(io::read_group_table(path)),
                       parse_gens(gens_spec)};
  }
  throw ParseError("uacert: '" + path +
                   "' has neither an 'order=n' nor a 'degree=d' header");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  auto out = io::detail::open_output(out_path, "uacert --out");
  out << text;
}

std::string fmt(double v) { return io::format_double(v); }

// ---------------------------------------------------------------------------

int cmd_build(const std::string& group_path, const std::string& gens_spec,
              const std::string& out_path) {
  const LoadedGroup loaded = load_group(group_path, gens_spec);
  std::ostringstream report;
  report << "group " << group_path << "\n";
  report << "order " << loaded.group.order() << "\n";
  report << "generators " << loaded.generators.size() << "\n";
  if (!loaded.generators.empty()) {
    const GeneratingSet s = make_generating_set(loaded.group, loaded.generators);
    const FiniteMetricSpace x = word_metric(loaded.group, s);
    report << "diameter " << x.diameter() << "\n";
    if (!out_path.empty()) {
      io::write_metric_csv(out_path, x);
      report << "metric written to " << out_path << "\n";
    }
  }
  std::cout << report.str();
  return 0;
}

int cmd_folner(const std::string& group_path, const std::string& gens_spec,
               double epsilon, int radius, int budget, const std::string& format,
               const std::string& out_path) {
  const LoadedGroup loaded = load_group(group_path, gens_spec);
  const GeneratingSet s = make_generating_set(loaded.group, loaded.generators);
  const FolnerCertificate cert = search_folner_set(loaded.group, s, radius, epsilon, budget);
  std::ostringstream report;
  if (format == "csv") {
    report << "set_size,radius,ratio,D_bound,pass\n";
    report << cert.set.size() << "," << cert.radius << "," << fmt(cert.ratio) << ","
           << cert.d_bound << ",1\n";
  } else {
    report << "folner set of size " << cert.set.size() << " at radius " << cert.radius
           << "\n";
    report << "ratio " << fmt(cert.ratio) << " <= epsilon " << fmt(epsilon) << "\n";
    report << "D_bound " << cert.d_bound << "\n";
    report << "pass 1\n";
  }
  emit(report.str(), out_path);
  return 0;
}

int cmd_hr_optimal(const std::string& group_path, const std::string& gens_spec,
                   int support_d, const std::string& format,
                   const std::string& out_path) {
  const LoadedGroup loaded = load_group(group_path, gens_spec);
  const GeneratingSet s = make_generating_set(loaded.group, loaded.generators);
  const auto len = detail::word_lengths(loaded.group, s.symmetrized);
  PointSet support;
  for (Index p = 0; p < loaded.group.order(); ++p)
    if (len[p] != kInfiniteDistance && len[p] <= support_d) support.push_back(p);
  const auto [f, eps] = optimal_hr_vector(loaded.group, s, support);
  std::ostringstream report;
  if (format == "csv") {
    report << "# group=" << group_path << " flags=nonneg,unit2 support_epsilon="
           << fmt(f.support_epsilon) << "\n";
    report << "index,value\n";
    for (Index i = 0; i < f.values.size(); ++i)
      if (f.values[i] != 0.0) report << i << "," << fmt(f.values[i]) << "\n";
  } else {
    report << "optimal vector on B(e," << support_d << "), support "
           << support.size() << " points\n";
    report << "epsilon_star " << fmt(eps) << "\n";
  }
  emit(report.str(), out_path);
  return 0;
}

struct PipelineRow {
  int member_index = 0;
  double epsilon = 0.0;
  int support_card = 0;
  double l1_norm = 0.0;
  int d_bound = 0;
  bool pass = false;
};

PipelineRow pipeline_member(const FamilyMember& member, double epsilon, int cap_n,
                            int index) {
  const FiniteGroup& g = member.group;
  const GeneratingSet s = make_generating_set(g, member.generators);
  const auto len = detail::word_lengths(g, s.symmetrized);
  const int diam = *std::max_element(len.begin(), len.end());

  // Stage 1: the smallest ball around the identity whose normalized
  // indicator has displacement at most epsilon. The whole group has
  // displacement 0, so the loop terminates.
  HRCertificate stage1;
  for (int d = 0; d <= diam; ++d) {
    PointSet f;
    for (Index p = 0; p < g.order(); ++p)
      if (len[p] <= d) f.push_back(p);
    stage1 = make_hr_certificate(normalized_indicator(g, f), s);
    if (stage1.epsilon <= epsilon) break;
  }

  const double l1_bound = std::max(1.0, stage1.l1_norm);
  const QuantChain chain = quantitative_chain(epsilon, l1_bound);
  if (chain.stage2_support_cap() > 2e9 && cap_n <= 0)
    throw PreconditionViolated(
        "uacert pipeline: stage-2 support cap exceeds integer range; pass --cap-n");

  const HRCertificate stage2 = compress_support(stage1.f, s, epsilon, l1_bound);
  const int n_cap =
      cap_n > 0 ? cap_n : static_cast<int>(std::ceil(chain.stage2_support_cap()));
  const HRCertificate stage3 = pack_components(stage2.f, s, chain.stage3_epsilon(), n_cap);

  PipelineRow row;
  row.member_index = index;
  row.epsilon = stage3.epsilon;
  row.support_card = stage3.support_card;
  row.l1_norm = stage3.l1_norm;
  row.d_bound = stage3.d_bound;
  const double radius_cap = 4.0 * (static_cast<double>(n_cap) + 2.0) * n_cap;
  row.pass = stage2.epsilon <= chain.stage2_epsilon() + 1e-9 &&
             stage2.support_card <= std::ceil(chain.stage2_support_cap()) &&
             stage3.epsilon <= chain.stage3_epsilon() + 1e-9 &&
             row.d_bound <= radius_cap;
  return row;
}

int cmd_pipeline(const std::string& family_path, double epsilon, int cap_n,
                 const std::string& format, const std::string& out_path) {
  const FamilySpec family = io::read_family_manifest(family_path);
  std::vector<std::future<PipelineRow>> futures;
  futures.reserve(family.members.size());
  for (size_t i = 0; i < family.members.size(); ++i)
    futures.push_back(std::async(std::launch::async, pipeline_member,
                                 std::cref(family.members[i]), epsilon, cap_n,
                                 static_cast<int>(i)));
  std::vector<PipelineRow> rows;
  rows.reserve(futures.size());
  for (auto& fut : futures) rows.push_back(fut.get());

  bool all_pass = true;
  std::ostringstream report;
  if (format == "csv") {
    report << "member_index,epsilon,support_card,l1_norm,D_bound,pass\n";
    for (const auto& row : rows)
      report << row.member_index << "," << fmt(row.epsilon) << "," << row.support_card
             << "," << fmt(row.l1_norm) << "," << row.d_bound << "," << (row.pass ? 1 : 0)
             << "\n";
  } else {
    for (const auto& row : rows)
      report << "member_index " << row.member_index << " epsilon " << fmt(row.epsilon)
             << " support_card " << row.support_card << " l1_norm " << fmt(row.l1_norm)
             << " D_bound " << row.d_bound << " pass " << (row.pass ? 1 : 0) << "\n";
  }
  for (const auto& row : rows) all_pass = all_pass && row.pass;
  report << "pass " << (all_pass ? 1 : 0) << "\n";
  emit(report.str(), out_path);
  return all_pass ? 0 : 1;
}

/// Seeded random f with entries in [0,1] and l1 norm at most l1_cap.
GroupVector seeded_kernel_function(const FiniteGroup& g, std::uint64_t seed,
                                   double l1_cap) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.order());
  const int card = std::min(8, g.order());
  for (int i = 0; i < card; ++i) v[pick(rng)] = std::abs(unif(rng));
  const double l1 = v.lpNorm<1>();
  if (l1 == 0.0) v[0] = 1.0;
  else if (l1 > l1_cap) v *= l1_cap / l1;
  return GroupVector{&g, std::move(v), kFloatSupportEpsilon};
}

int cmd_operator_check(const std::string& group_path, const std::string& gens_spec,
                       int count, std::uint64_t seed, double l1_cap,
                       const std::string& format, const std::string& out_path) {
  const LoadedGroup loaded = load_group(group_path, gens_spec);
  if (loaded.group.order() > kDenseEigOrderCap)
    throw PreconditionViolated(
        "uacert operator-check: order exceeds the dense_eig cap; use the library's "
        "power_iteration mode directly");
  std::vector<std::future<NormIdentityReport>> futures;
  futures.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    futures.push_back(std::async(std::launch::async, [&loaded, seed, l1_cap, i] {
      return verify_norm_identity(
          seeded_kernel_function(loaded.group, seed + static_cast<std::uint64_t>(i),
                                 l1_cap));
    }));
  std::vector<NormIdentityReport> reports;
  reports.reserve(futures.size());
  for (auto& fut : futures) reports.push_back(fut.get());

  double max_rel_gap = 0.0, max_method_gap = 0.0;
  bool all_pass = true;
  std::ostringstream report;
  if (format == "csv")
    report << "item,l1_norm_squared,dense_norm,power_norm,rel_gap,method_rel_gap,pass\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    max_rel_gap = std::max(max_rel_gap, r.rel_gap);
    max_method_gap = std::max(max_method_gap, r.method_rel_gap);
    all_pass = all_pass && r.pass;
    if (format == "csv")
      report << i << "," << fmt(r.l1_norm_squared) << "," << fmt(r.dense_norm) << ","
             << fmt(r.power_norm) << "," << fmt(r.rel_gap) << ","
             << fmt(r.method_rel_gap) << "," << (r.pass ? 1 : 0) << "\n";
    else
      report << "item " << i << " rel_gap " << fmt(r.rel_gap) << " method_rel_gap "
             << fmt(r.method_rel_gap) << " pass " << (r.pass ? 1 : 0) << "\n";
  }
  report << "max_rel_gap " << fmt(max_rel_gap) << "\n";
  report << "max_method_rel_gap " << fmt(max_method_gap) << "\n";
  report << "pass " << (all_pass ? 1 : 0) << "\n";
  emit(report.str(), out_path);
  return all_pass ? 0 : 1;
}

int cmd_property_a(const std::string& group_path, const std::string& gens_spec,
                   const std::string& vector_path, int support_d, double epsilon,
                   int radius, int quantize_q, const std::string& format,
                   const std::string& out_path) {
  const LoadedGroup loaded = load_group(group_path, gens_spec);
  const GeneratingSet s = make_generating_set(loaded.group, loaded.generators);
  GroupVector f{&loaded.group, Eigen::VectorXd::Zero(loaded.group.order()), 0.0};
  if (vector_path.empty()) {
    const auto len = detail::word_lengths(loaded.group, s.symmetrized);
    PointSet support;
    for (Index p = 0; p < loaded.group.order(); ++p)
      if (len[p] != kInfiniteDistance && len[p] <= support_d) support.push_back(p);
    f = optimal_hr_vector(loaded.group, s, support).first;
  } else {
    f = io::read_vector_csv(vector_path, loaded.group);
  }
  const HigsonRoeMap map = hr_to_higson_roe(loaded.group, s, f, support_d);
  const PropertyAReport pa = check_property_a_certificate(map, epsilon, radius, support_d);

  std::ostringstream report;
  bool pass = pa.pass;
  if (format == "csv") {
    report << "variation,worst_pair_x,worst_pair_y,pass\n";
    report << fmt(pa.variation) << "," << pa.worst_pair_x << "," << pa.worst_pair_y << ","
           << (pa.pass ? 1 : 0) << "\n";
  } else {
    report << "variation " << fmt(pa.variation) << " at radius " << radius << "\n";
    report << "worst_pair " << pa.worst_pair_x << " " << pa.worst_pair_y << "\n";
    if (pa.worst_support_point >= 0)
      report << "support escapes at point " << pa.worst_support_point << "\n";
    report << "pass " << (pa.pass ? 1 : 0) << "\n";
  }
  if (quantize_q > 0) {
    // columnwise Mazur map to l1, then integer quantization
    const Eigen::MatrixXd xi_l1 = map.xi.array().square();
    const SetFamilyCertificate cert =
        l1_to_setfamily(map.space, xi_l1, quantize_q, support_d);
    const SetFamilyReport sf = check_setfamily_certificate(
        cert, std::numeric_limits<double>::infinity(), radius, support_d);
    if (format == "csv")
      report << "setfamily_worst_ratio,supports_ok\n"
             << fmt(sf.worst_ratio) << "," << (sf.supports_ok ? 1 : 0) << "\n";
    else
      report << "setfamily_worst_ratio " << fmt(sf.worst_ratio) << " supports_ok "
             << (sf.supports_ok ? 1 : 0) << "\n";
    pass = pass && sf.supports_ok;
  }
  emit(report.str(), out_path);
  return pass ? 0 : 1;
}

int cmd_counterexample(const std::string& family_path, int d_probe,
                       const std::string& format, const std::string& out_path) {
  const FamilySpec family = io::read_family_manifest(family_path);
  const size_t gen_count = family.members.front().generators.size();
  for (const auto& m : family.members)
    if (m.generators.size() != gen_count)
      throw FamilyMismatch(
          "uacert counterexample: members must share a common number of generators");
  std::vector<std::future<CounterexampleRow>> futures;
  futures.reserve(family.members.size());
  for (size_t i = 0; i < family.members.size(); ++i)
    futures.push_back(std::async(std::launch::async, detail::counterexample_member,
                                 std::cref(family.members[i]), d_probe,
                                 static_cast<int>(i)));
  std::vector<CounterexampleRow> rows;
  rows.reserve(futures.size());
  for (auto& fut : futures) rows.push_back(fut.get());

  bool bound_holds = true;
  for (const auto& row : rows)
    if (row.epsilon_star * row.epsilon_star < row.spectral_lower_bound - 1e-9)
      bound_holds = false;

  std::ostringstream report;
  if (format == "report") {
    for (const auto& row : rows)
      report << "member_index " << row.member_index << " group_order " << row.group_order
             << " trivial_variation " << fmt(row.trivial_variation) << " trivial_l1 "
             << fmt(row.trivial_l1) << " epsilon_star " << fmt(row.epsilon_star)
             << " spectral_lower_bound " << fmt(row.spectral_lower_bound)
             << " ball_fraction " << fmt(row.ball_fraction) << "\n";
    report << "spectral_bound_holds " << (bound_holds ? 1 : 0) << "\n";
  } else {
    report << "member_index,group_order,trivial_variation,trivial_l1,epsilon_star,"
              "spectral_lower_bound,ball_fraction\n";
    for (const auto& row : rows)
      report << row.member_index << "," << row.group_order << ","
             << fmt(row.trivial_variation) << "," << fmt(row.trivial_l1) << ","
             << fmt(row.epsilon_star) << "," << fmt(row.spectral_lower_bound) << ","
             << fmt(row.ball_fraction) << "\n";
  }
  emit(report.str(), out_path);
  return bound_holds ? 0 : 1;
}

int classify(const Error& e) {
  if (dynamic_cast<const BudgetExhausted*>(&e) != nullptr) return 1;
  if (dynamic_cast<const AssertionFailed*>(&e) != nullptr) return 1;
  if (dynamic_cast<const NoConvergence*>(&e) != nullptr) return 1;
  if (dynamic_cast<const EigensolveFailure*>(&e) != nullptr) return 1;
  if (dynamic_cast<const SupportViolation*>(&e) != nullptr) return 1;
  return 2;  // input or precondition problem
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates of uniform amenability and Property A"};
  app.require_subcommand(1);

  std::string group_path, family_path, gens_spec, vector_path, out_path;
  std::string format = "report";
  double epsilon = 0.5, l1_m = 3.0;
  int radius = 1, support_d = 3, cap_n = 0, quantize_q = 0, budget = 1000, count = 10;
  std::uint64_t seed = 0x5eed;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"report", "csv"}));
    cmd->add_option("--out", out_path, "write the report to PATH");
  };
  auto add_gens = [&](CLI::App* cmd) {
    cmd->add_option("--gens", gens_spec, "generator indices i,j,... for table groups");
  };

  CLI::App* build = app.add_subcommand("build", "ingest and validate a group file");
  build->add_option("group", group_path, "group file")->required();
  add_gens(build);
  build->add_option("--out", out_path, "write the word metric as CSV to PATH");

  CLI::App* folner = app.add_subcommand("folner", "search for a Folner set");
  folner->add_option("group", group_path)->required();
  add_gens(folner);
  folner->add_option("--epsilon", epsilon, "target boundary ratio");
  folner->add_option("--radius", radius, "boundary radius R");
  folner->add_option("--budget", budget, "greedy improvement budget");
  add_common(folner);

  CLI::App* hr = app.add_subcommand("hr-optimal", "optimal vector on a ball");
  hr->add_option("group", group_path)->required();
  add_gens(hr);
  hr->add_option("--support-d", support_d, "ball radius D");
  add_common(hr);

  CLI::App* pipeline = app.add_subcommand("pipeline", "run the compress/pack chain");
  pipeline->add_option("family", family_path, "family manifest")->required();
  pipeline->add_option("--epsilon", epsilon, "stage-1 displacement budget");
  pipeline->add_option("--cap-n", cap_n, "override the stage-2 support cap N");
  add_common(pipeline);

  CLI::App* opcheck = app.add_subcommand("operator-check", "verify the norm identity");
  opcheck->add_option("group", group_path)->required();
  add_gens(opcheck);
  opcheck->add_option("--cap-n", count, "number of random functions");
  opcheck->add_option("--l1-m", l1_m, "l1 norm cap for random functions");
  opcheck->add_option("--seed", seed, "rng seed");
  add_common(opcheck);

  CLI::App* propa = app.add_subcommand("property-a", "check a Higson-Roe certificate");
  propa->add_option("group", group_path)->required();
  propa->add_option("vector", vector_path, "vector CSV (default: optimal on the ball)");
  add_gens(propa);
  propa->add_option("--support-d", support_d, "support bound D");
  propa->add_option("--epsilon", epsilon, "variation budget");
  propa->add_option("--radius", radius, "variation radius R");
  propa->add_option("--quantize-q", quantize_q, "also quantize to a set family");
  add_common(propa);

  CLI::App* counter = app.add_subcommand("counterexample", "run the family demo");
  counter->add_option("family", family_path, "family manifest")->required();
  counter->add_option("--support-d", support_d, "probe ball radius D");
  add_common(counter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(group_path, gens_spec, out_path);
    if (folner->parsed())
      return cmd_folner(group_path, gens_spec, epsilon, radius, budget, format, out_path);
    if (hr->parsed())
      return cmd_hr_optimal(group_path, gens_spec, support_d, format, out_path);
    if (pipeline->parsed())
      return cmd_pipeline(family_path, epsilon, cap_n, format, out_path);
    if (opcheck->parsed())
      return cmd_operator_check(group_path, gens_spec, count, seed, l1_m, format,
                                out_path);
    if (propa->parsed())
      return cmd_property_a(group_path, gens_spec, vector_path, support_d, epsilon,
                            radius, quantize_q, format, out_path);
    if (counter->parsed())
      return cmd_counterexample(family_path, support_d, format, out_path);
  } catch (const ua::Error& e) {
    std::cerr << "uacert: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "uacert: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
