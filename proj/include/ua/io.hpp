#ifndef UA_IO_HPP
#define UA_IO_HPP

#include <Eigen/Dense>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ua/errors.hpp"
#include "ua/group_core.hpp"
#include "ua/group_functions.hpp"

namespace ua::io {

/// Shortest decimal form that round-trips a double exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(line);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline std::string strip(std::string s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

inline int parse_int(const std::string& s, const std::string& where) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": expected integer, got '" + s + "'");
  }
}

inline std::ifstream open_input(const std::string& path, const std::string& where) {
  std::ifstream in(path);
  if (!in) throw ParseError(where + ": cannot open '" + path + "'");
  return in;
}

inline std::ofstream open_output(const std::string& path, const std::string& where) {
  std::ofstream out(path);
  if (!out) throw ParseError(where + ": cannot open '" + path + "' for writing");
  return out;
}

}  // namespace detail

/// Multiplication table: one-line header `order=n`, then n CSV rows of
/// indices.
inline Eigen::MatrixXi read_group_table(const std::string& path) {
  auto in = detail::open_input(path, "read_group_table");
  std::string line;
  if (!std::getline(in, line) || detail::strip(line).rfind("order=", 0) != 0)
    throw ParseError("read_group_table: missing 'order=n' header in " + path);
  const int n = detail::parse_int(detail::strip(line).substr(6), "read_group_table");
  if (n <= 0) throw ParseError("read_group_table: order must be positive");
  Eigen::MatrixXi table(n, n);
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      throw ParseError("read_group_table: expected " + std::to_string(n) + " rows");
    const auto cells = detail::split(detail::strip(line), ',');
    if (static_cast<int>(cells.size()) != n)
      throw ParseError("read_group_table: row " + std::to_string(r) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(n));
    for (int c = 0; c < n; ++c)
      table(r, c) = detail::parse_int(detail::strip(cells[c]), "read_group_table");
  }
  return table;
}

inline void write_group_table(const std::string& path, const Eigen::MatrixXi& table) {
  auto out = detail::open_output(path, "write_group_table");
  out << "order=" << table.rows() << "\n";
  for (Eigen::Index r = 0; r < table.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.cols(); ++c)
      out << table(r, c) << (c + 1 == table.cols() ? "" : ",");
    out << "\n";
  }
}

/// Permutation generators: header `degree=d`, then one permutation per line
/// as space-separated images.
inline std::vector<std::vector<int>> read_permutations(const std::string& path) {
  auto in = detail::open_input(path, "read_permutations");
  std::string line;
  if (!std::getline(in, line) || detail::strip(line).rfind("degree=", 0) != 0)
    throw ParseError("read_permutations: missing 'degree=d' header in " + path);
  const int degree =
      detail::parse_int(detail::strip(line).substr(7), "read_permutations");
  if (degree <= 0) throw ParseError("read_permutations: degree must be positive");
  std::vector<std::vector<int>> perms;
  while (std::getline(in, line)) {
    line = detail::strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<int> p;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) p.push_back(detail::parse_int(tok, "read_permutations"));
    if (static_cast<int>(p.size()) != degree)
      throw ParseError("read_permutations: permutation of wrong degree in " + path);
    perms.push_back(std::move(p));
  }
  return perms;
}

/// Distance matrices as plain CSV; `inf` marks disconnected pairs.
inline FiniteMetricSpace read_metric_csv(const std::string& path) {
  auto in = detail::open_input(path, "read_metric_csv");
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::strip(line);
    if (line.empty()) continue;
    std::vector<int> row;
    for (const auto& cell : detail::split(line, ',')) {
      const std::string v = detail::strip(cell);
      row.push_back(v == "inf" ? kInfiniteDistance : detail::parse_int(v, "read_metric_csv"));
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXi d(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("read_metric_csv: matrix is not square in " + path);
    for (int j = 0; j < n; ++j) d(i, j) = rows[i][j];
  }
  return FiniteMetricSpace(std::move(d));
}

inline void write_metric_csv(const std::string& path, const FiniteMetricSpace& space) {
  auto out = detail::open_output(path, "write_metric_csv");
  for (int i = 0; i < space.size(); ++i) {
    for (int j = 0; j < space.size(); ++j) {
      if (space.dist(i, j) == kInfiniteDistance)
        out << "inf";
      else
        out << space.dist(i, j);
      out << (j + 1 == space.size() ? "" : ",");
    }
    out << "\n";
  }
}

/// Vectors as `index,value` CSV with a header naming the group file and
/// flags; bit-exact at double precision.
inline void write_vector_csv(const std::string& path, const GroupVector& f,
                             const std::string& group_name,
                             const std::string& flags = "") {
  auto out = detail::open_output(path, "write_vector_csv");
  out << "# group=" << group_name << " flags=" << flags
      << " support_epsilon=" << format_double(f.support_epsilon) << "\n";
  out << "index,value\n";
  for (Index i = 0; i < f.values.size(); ++i)
    if (f.values[i] != 0.0) out << i << "," << format_double(f.values[i]) << "\n";
}

inline GroupVector read_vector_csv(const std::string& path, const FiniteGroup& g) {
  auto in = detail::open_input(path, "read_vector_csv");
  Eigen::VectorXd values = Eigen::VectorXd::Zero(g.order());
  double support_epsilon = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::strip(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("support_epsilon=");
      if (pos != std::string::npos)
        support_epsilon = std::strtod(line.c_str() + pos + 16, nullptr);
      continue;
    }
    if (line == "index,value") continue;
    const auto cells = detail::split(line, ',');
    if (cells.size() != 2) throw ParseError("read_vector_csv: malformed row '" + line + "'");
    const int idx = detail::parse_int(detail::strip(cells[0]), "read_vector_csv");
    if (idx < 0 || idx >= g.order())
      throw ParseError("read_vector_csv: index " + std::to_string(idx) +
                       " out of range for group of order " + std::to_string(g.order()));
    values[idx] = std::strtod(detail::strip(cells[1]).c_str(), nullptr);
  }
  return GroupVector{&g, std::move(values), support_epsilon};
}

/// Family manifest: one member per line, either `perms <path>` or
/// `table <path> gens=<i,j,...>`; `#` starts a comment. Paths are resolved
/// relative to the manifest.
inline FamilySpec read_family_manifest(const std::string& path, int order_cap = 200000) {
  auto in = detail::open_input(path, "read_family_manifest");
  const auto base = std::filesystem::path(path).parent_path();
  FamilySpec family;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string kind, member_path;
    ss >> kind >> member_path;
    const std::string resolved = (base / member_path).string();
    if (kind == "perms") {
      auto result = build_group_from_permutations(io::read_permutations(resolved), order_cap);
      family.members.push_back({std::move(result.group), std::move(result.generators)});
    } else if (kind == "table") {
      std::string gens_spec;
      ss >> gens_spec;
      if (gens_spec.rfind("gens=", 0) != 0)
        throw ParseError("read_family_manifest: line " + std::to_string(line_no) +
                         ": table members need gens=i,j,...");
      std::vector<Index> gens;
      for (const auto& tok : detail::split(gens_spec.substr(5), ','))
        gens.push_back(detail::parse_int(detail::strip(tok), "read_family_manifest"));
      family.members.push_back(
          {build_group_from_table(read_group_table(resolved)), std::move(gens)});
    } else {
      throw ParseError("read_family_manifest: line " + std::to_string(line_no) +
                       ": unknown member kind '" + kind + "'");
    }
  }
  if (family.members.empty())
    throw EmptySet("read_family_manifest: no members in " + path);
  return family;
}

}  // namespace ua::io

#endif  // UA_IO_HPP
