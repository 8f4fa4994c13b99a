#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latdeg/lattice/engine.hpp"

namespace latdeg {

enum class Backend { Exact, Specialized };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view s);

struct TableMeta {
  std::string rule;
  InitScheme init = InitScheme::Corner;
  std::string coeff_mode;
  Backend backend = Backend::Exact;
  std::vector<std::uint64_t> seeds;
  int trials = 0;
};

/// d^m_n on rows m in [0, rows) and columns n in [0, cols).
class DegreeTable {
 public:
  DegreeTable() = default;
  DegreeTable(Region region, TableMeta meta);

  Region region() const { return region_; }
  int rows() const { return region_.rows; }
  int cols() const { return region_.cols; }
  const TableMeta& meta() const { return meta_; }
  TableMeta& meta() { return meta_; }

  long at(int m, int n) const { return entries_.at(index(m, n)); }
  long at(CellIndex c) const { return at(c.m, c.n); }
  void set(int m, int n, long d) { entries_.at(index(m, n)) = d; }
  std::vector<long> row(int m) const;
  std::vector<std::vector<long>> matrix() const;

  /// Cells ordered by anti-diagonal, then by m. A cell never precedes the
  /// cells it is computed from.
  std::vector<CellIndex> dependency_order() const;

  friend bool operator==(const DegreeTable& a, const DegreeTable& b) {
    return a.region_ == b.region_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int m, int n) const;

  Region region_;
  TableMeta meta_;
  std::vector<long> entries_;
};

class RegionMismatchError : public Error {
 public:
  using Error::Error;
};

struct Discrepancy {
  CellIndex cell;
  long a = 0;
  long b = 0;
};

struct TableComparison {
  bool equal = true;
  std::optional<Discrepancy> first_discrepancy;
};

TableComparison compare_tables(const DegreeTable& a, const DegreeTable& b);

nlohmann::json to_json(const DegreeTable& t);
/// One line per row m, comma separated.
std::string to_csv(const DegreeTable& t);
/// Right-aligned matrix, m increasing downward.
std::string to_text(const DegreeTable& t);

}  // namespace latdeg
