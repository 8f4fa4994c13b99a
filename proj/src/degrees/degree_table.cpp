#include "latdeg/degrees/degree_table.hpp"

#include <algorithm>
#include <sstream>

namespace latdeg {

std::string_view backend_name(Backend b) { return b == Backend::Exact ? "exact" : "specialized"; }

Backend parse_backend(std::string_view s) {
  if (s == "exact") return Backend::Exact;
  if (s == "specialized") return Backend::Specialized;
  throw Error("unknown backend '" + std::string(s) + "' (expected exact or specialized)");
}

DegreeTable::DegreeTable(Region region, TableMeta meta)
    : region_(region), meta_(std::move(meta)), entries_(std::size_t(region.rows) * region.cols, 0) {
  if (region.rows < 1 || region.cols < 1) throw InitError("degree table needs a non-empty region");
}

std::size_t DegreeTable::index(int m, int n) const {
  if (m < 0 || n < 0 || m >= region_.rows || n >= region_.cols)
    throw InitError("cell " + to_string({m, n}) + " is outside the table");
  return std::size_t(m) * region_.cols + n;
}

std::vector<long> DegreeTable::row(int m) const {
  std::vector<long> out;
  for (int n = 0; n < cols(); ++n) out.push_back(at(m, n));
  return out;
}

std::vector<std::vector<long>> DegreeTable::matrix() const {
  std::vector<std::vector<long>> out;
  for (int m = 0; m < rows(); ++m) out.push_back(row(m));
  return out;
}

std::vector<CellIndex> DegreeTable::dependency_order() const {
  std::vector<CellIndex> cells;
  for (int m = 0; m < rows(); ++m)
    for (int n = 0; n < cols(); ++n) cells.push_back({m, n});
  std::stable_sort(cells.begin(), cells.end(),
                   [](CellIndex a, CellIndex b) { return a.m + a.n < b.m + b.n; });
  return cells;
}

TableComparison compare_tables(const DegreeTable& a, const DegreeTable& b) {
  if (!(a.region() == b.region()))
    throw RegionMismatchError("cannot compare a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " table with a " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " one");
  for (CellIndex c : a.dependency_order())
    if (a.at(c) != b.at(c)) return {false, Discrepancy{c, a.at(c), b.at(c)}};
  return {};
}

nlohmann::json to_json(const DegreeTable& t) {
  const TableMeta& meta = t.meta();
  return {{"rule", meta.rule},
          {"init", std::string(scheme_name(meta.init))},
          {"coeff_mode", meta.coeff_mode},
          {"backend", std::string(backend_name(meta.backend))},
          {"seeds", meta.seeds},
          {"trials", meta.trials},
          {"region", {t.rows(), t.cols()}},
          {"degrees", t.matrix()}};
}

std::string to_csv(const DegreeTable& t) {
  std::ostringstream out;
  for (int m = 0; m < t.rows(); ++m) {
    for (int n = 0; n < t.cols(); ++n) out << (n ? "," : "") << t.at(m, n);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const DegreeTable& t) {
  std::size_t width = 1;
  for (int m = 0; m < t.rows(); ++m)
    for (int n = 0; n < t.cols(); ++n) width = std::max(width, std::to_string(t.at(m, n)).size());
  std::ostringstream out;
  for (int m = 0; m < t.rows(); ++m) {
    for (int n = 0; n < t.cols(); ++n) {
      std::string s = std::to_string(t.at(m, n));
      out << (n ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace latdeg
