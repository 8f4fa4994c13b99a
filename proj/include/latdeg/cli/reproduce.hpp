#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "latdeg/degrees/backends.hpp"

namespace latdeg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ReproduceOptions {
  unsigned threads = 0;
};

/// Runs the acceptance checks. Every exact lattice built along the way is
/// also checked for homogeneity cell by cell; check 10 reports the tally.
class AcceptanceSession {
 public:
  static constexpr int count = 10;

  explicit AcceptanceSession(ReproduceOptions opt = {}) : opt_(opt) {}

  static std::string title(int id);
  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

  DegreeTable exact(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs);
  DegreeTable fast(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs,
                   std::uint64_t seed = 1);

 private:
  bool kdv(std::string& detail);
  bool pkdv(std::string& detail);
  bool mkdv(std::string& detail);
  bool sine_gordon(std::string& detail);
  bool liouville(std::string& detail);
  bool burgers(std::string& detail);
  bool derivation(std::string& detail);
  bool sufficiency(std::string& detail);
  bool oracle(std::string& detail);
  bool substrate(std::string& detail);

  ReproduceOptions opt_;
  long homogeneous_cells_ = 0;
  std::vector<std::string> inhomogeneous_;
};

/// "criterion 3: PASS  <title>  (<detail>)"
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace latdeg
