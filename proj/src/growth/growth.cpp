#include "latdeg/growth/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

namespace latdeg {

std::string_view term_name(BasisTerm t) {
  switch (t) {
    case BasisTerm::One: return "1";
    case BasisTerm::M: return "m";
    case BasisTerm::N: return "n";
    case BasisTerm::MN: return "m*n";
    case BasisTerm::Min: return "min(m,n)";
    case BasisTerm::Max: return "max(m,n)";
    case BasisTerm::M2: return "m^2";
    case BasisTerm::N2: return "n^2";
    case BasisTerm::Sum: return "N";
    case BasisTerm::Sum2: return "N^2";
  }
  return "?";
}

long evaluate_term(BasisTerm t, int m, int n) {
  switch (t) {
    case BasisTerm::One: return 1;
    case BasisTerm::M: return m;
    case BasisTerm::N: return n;
    case BasisTerm::MN: return long(m) * n;
    case BasisTerm::Min: return std::min(m, n);
    case BasisTerm::Max: return std::max(m, n);
    case BasisTerm::M2: return long(m) * m;
    case BasisTerm::N2: return long(n) * n;
    case BasisTerm::Sum: return m + n;
    case BasisTerm::Sum2: return long(m + n) * (m + n);
  }
  return 0;
}

std::string_view growth_kind_name(GrowthKind k) {
  switch (k) {
    case GrowthKind::Linear: return "linear";
    case GrowthKind::Polynomial: return "polynomial";
    case GrowthKind::Exponential: return "exponential";
    case GrowthKind::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string_view interpretation_name(Interpretation i) {
  switch (i) {
    case Interpretation::Linearisable: return "linearisable";
    case Interpretation::ISTIntegrable: return "IST-integrable";
    case Interpretation::NonIntegrable: return "non-integrable";
    case Interpretation::Unknown: return "unknown";
  }
  return "?";
}

Interpretation interpretation_of(GrowthKind k) {
  switch (k) {
    case GrowthKind::Linear: return Interpretation::Linearisable;
    case GrowthKind::Polynomial: return Interpretation::ISTIntegrable;
    case GrowthKind::Exponential: return Interpretation::NonIntegrable;
    case GrowthKind::Indeterminate: return Interpretation::Unknown;
  }
  return Interpretation::Unknown;
}

namespace {

using Row = std::vector<mpq_class>;

// Unique solution of an overdetermined exact system, or nothing when the
// columns are dependent or the rows inconsistent.
std::optional<Row> solve_exact(std::vector<Row> a, Row b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c, ++r) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  Row x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[c] / a[c][c];
  return x;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order until it
// returns true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_region(const DegreeTable& t, const char* what) {
  if (t.rows() < 4 || t.cols() < 4)
    throw GrowthError(std::string(what) + " needs a table of at least 4x4, got " + std::to_string(t.rows()) + "x" +
                      std::to_string(t.cols()));
}

std::string format_coefficient(const mpq_class& c, std::string_view term, bool first) {
  std::string out;
  mpq_class a = abs(c);
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (term == "1") return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  return out + std::string(term);
}

std::string join_terms(const std::vector<std::pair<mpq_class, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c == 0) continue;
    out += format_coefficient(c, name, out.empty());
  }
  return out.empty() ? "0" : out;
}

std::vector<long> diagonal(const DegreeTable& t) {
  std::vector<long> d;
  for (int k = 0; k < std::min(t.rows(), t.cols()); ++k) d.push_back(t.at(k, k));
  return d;
}

}  // namespace

mpq_class ClosedFormFit::operator()(int m, int n) const {
  mpq_class v = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) v += coefficients[i] * evaluate_term(basis[i], m, n);
  return v;
}

mpq_class ClosedFormFit::coefficient(BasisTerm t) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == t) return coefficients[i];
  return 0;
}

std::string ClosedFormFit::to_string() const {
  if (!valid) return "no closed form";
  static const BasisTerm order[] = {BasisTerm::MN,  BasisTerm::M2, BasisTerm::N2, BasisTerm::Sum2, BasisTerm::Max,
                                    BasisTerm::Min, BasisTerm::M,  BasisTerm::N,  BasisTerm::Sum,  BasisTerm::One};
  std::vector<std::pair<mpq_class, std::string>> terms;
  for (BasisTerm t : order) terms.emplace_back(coefficient(t), std::string(term_name(t)));
  return join_terms(terms);
}

std::string RecursionFit::to_string() const {
  if (!valid) return "no recursion";
  std::string rhs = join_terms({{a, "d(m+1,n)"},
                                {b, "d(m,n+1)"},
                                {c, "d(m,n)"},
                                {e, "1"},
                                {delta.value_or(0), "[m=n]"}});
  return "d(m+1,n+1) = " + rhs;
}

ClosedFormFit fit_closed_form(const DegreeTable& table) {
  require_region(table, "closed-form fitting");
  std::vector<BasisTerm> all;
  if (table.meta().init == InitScheme::Staircase)
    all = {BasisTerm::One, BasisTerm::Sum, BasisTerm::Sum2};
  else
    all = {BasisTerm::One, BasisTerm::M,   BasisTerm::N,   BasisTerm::MN,
           BasisTerm::Min, BasisTerm::Max, BasisTerm::M2, BasisTerm::N2};

  ClosedFormFit fit;
  fit.training_limit = std::max(2, std::min(table.rows(), table.cols()) - 2);
  fit.validation_region = table.region();

  std::vector<CellIndex> training, interior;
  for (int m = 1; m < table.rows(); ++m)
    for (int n = 1; n < table.cols(); ++n) {
      interior.push_back({m, n});
      if (m <= fit.training_limit && n <= fit.training_limit) training.push_back({m, n});
    }

  for (int k = 1; k <= int(all.size()); ++k) {
    bool found = for_each_subset(int(all.size()), k, [&](const std::vector<int>& idx) {
      std::vector<Row> a;
      Row b;
      for (CellIndex c : training) {
        Row row;
        for (int i : idx) row.push_back(evaluate_term(all[i], c.m, c.n));
        a.push_back(std::move(row));
        b.push_back(table.at(c));
      }
      auto x = solve_exact(std::move(a), std::move(b));
      if (!x) return false;
      ClosedFormFit trial = fit;
      for (int i : idx) trial.basis.push_back(all[i]);
      trial.coefficients = *x;
      for (CellIndex c : interior)
        if (trial(c.m, c.n) != table.at(c)) return false;
      trial.valid = true;
      fit = std::move(trial);
      return true;
    });
    if (found) break;
  }
  return fit;
}

RecursionFit detect_recursion(const DegreeTable& table) {
  require_region(table, "recursion detection");
  RecursionFit fit;
  fit.valid_region = table.region();
  const int limit = std::min(std::max(3, std::min(table.rows(), table.cols()) - 2),
                             std::min(table.rows(), table.cols()) - 1);

  // Unknowns: a, b, c, e, delta.
  auto features = [&](int m, int n) {
    return Row{table.at(m + 1, n), table.at(m, n + 1), table.at(m, n), 1, m == n ? 1 : 0};
  };
  std::vector<CellIndex> training, all;  // source corners (m, n) of the targets
  for (int m = 0; m + 1 < table.rows(); ++m)
    for (int n = 0; n + 1 < table.cols(); ++n) {
      all.push_back({m, n});
      if (m + 1 <= limit && n + 1 <= limit) training.push_back({m, n});
    }

  for (int k = 1; k <= 5; ++k) {
    bool found = for_each_subset(5, k, [&](const std::vector<int>& idx) {
      std::vector<Row> a;
      Row b;
      for (CellIndex c : training) {
        Row f = features(c.m, c.n), row;
        for (int i : idx) row.push_back(f[i]);
        a.push_back(std::move(row));
        b.push_back(table.at(c.m + 1, c.n + 1));
      }
      auto x = solve_exact(std::move(a), std::move(b));
      if (!x) return false;
      Row coef(5, mpq_class(0));
      for (std::size_t i = 0; i < idx.size(); ++i) coef[idx[i]] = (*x)[i];
      for (CellIndex c : all) {
        Row f = features(c.m, c.n);
        mpq_class v = 0;
        for (int i = 0; i < 5; ++i) v += coef[i] * f[i];
        if (v != table.at(c.m + 1, c.n + 1)) return false;
      }
      fit.a = coef[0];
      fit.b = coef[1];
      fit.c = coef[2];
      fit.e = coef[3];
      if (std::find(idx.begin(), idx.end(), 4) != idx.end()) fit.delta = coef[4];
      fit.valid = true;
      return true;
    });
    if (found) break;
  }
  return fit;
}

EntropyEstimate entropy_estimate(const DegreeTable& table) {
  if (table.rows() >= 4 && table.cols() >= 4 && fit_closed_form(table).valid)
    return {0.0, 1.0, "closed form fits; polynomial growth"};
  std::vector<long> d = diagonal(table);
  const int K = int(d.size()) - 1;
  if (K < 4) throw GrowthError("entropy needs diagonal cells up to k = 4 at least, have k = " + std::to_string(K));

  // Three equations in (E, alpha, c); Cramer's rule.
  std::array<std::array<double, 3>, 3> a;
  std::array<double, 3> b;
  for (int i = 0; i < 3; ++i) {
    int k = K - 2 + i;
    if (d[k] <= 0) throw GrowthError("diagonal degree is zero at k = " + std::to_string(k));
    a[i] = {2.0 * k, std::log(double(k)), 1.0};
    b[i] = std::log(double(d[k]));
  }
  auto det = [](const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  auto a0 = a;
  for (int i = 0; i < 3; ++i) a0[i][0] = b[i];
  double E = det(a0) / det(a);
  std::ostringstream how;
  how << "log d(k,k) = 2 E k + alpha log k + c through k = " << K - 2 << ".." << K;
  return {E, std::exp(E), how.str()};
}

GrowthClass classify(const DegreeTable& table) {
  ClosedFormFit fit = fit_closed_form(table);
  GrowthKind kind = GrowthKind::Indeterminate;
  if (fit.valid) {
    bool quadratic = fit.coefficient(BasisTerm::MN) != 0 || fit.coefficient(BasisTerm::M2) != 0 ||
                     fit.coefficient(BasisTerm::N2) != 0 || fit.coefficient(BasisTerm::Sum2) != 0;
    kind = quadratic ? GrowthKind::Polynomial : GrowthKind::Linear;
  } else {
    std::vector<long> d = diagonal(table);
    const int K = int(d.size()) - 1;
    if (K >= 3 && d[K - 3] > 0) {
      double r1 = double(d[K - 2]) / d[K - 3], r2 = double(d[K - 1]) / d[K - 2], r3 = double(d[K]) / d[K - 1];
      if (r1 > 1.2 && r2 > 1.2 && r3 > 1.2 && r1 <= r2 && r2 <= r3) kind = GrowthKind::Exponential;
    }
  }
  return {kind, interpretation_of(kind)};
}

GrowthReport analyze(const DegreeTable& table) {
  GrowthReport r;
  r.fit = fit_closed_form(table);
  r.recursion = detect_recursion(table);
  try {
    r.entropy = entropy_estimate(table);
  } catch (const GrowthError&) {
  }
  r.growth = classify(table);
  return r;
}

nlohmann::json to_json(const ClosedFormFit& f) {
  nlohmann::json basis = nlohmann::json::array(), coef = nlohmann::json::array();
  for (std::size_t i = 0; i < f.basis.size(); ++i) {
    basis.push_back(std::string(term_name(f.basis[i])));
    coef.push_back(f.coefficients[i].get_str());
  }
  return {{"valid", f.valid},
          {"formula", f.to_string()},
          {"basis", basis},
          {"coefficients", coef},
          {"training_limit", f.training_limit},
          {"validation_region", {f.validation_region.rows, f.validation_region.cols}}};
}

nlohmann::json to_json(const RecursionFit& r) {
  nlohmann::json j{{"valid", r.valid},
                   {"formula", r.to_string()},
                   {"a", r.a.get_str()},
                   {"b", r.b.get_str()},
                   {"c", r.c.get_str()},
                   {"e", r.e.get_str()},
                   {"valid_region", {r.valid_region.rows, r.valid_region.cols}}};
  j["delta"] = r.delta ? nlohmann::json(r.delta->get_str()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const GrowthReport& r) {
  nlohmann::json j{{"fit", to_json(r.fit)},
                   {"recursion", to_json(r.recursion)},
                   {"class", std::string(growth_kind_name(r.growth.kind))},
                   {"interpretation", std::string(interpretation_name(r.growth.interpretation))}};
  if (r.entropy)
    j["entropy"] = {{"E", r.entropy->E}, {"ratio", r.entropy->ratio}, {"extrapolation", r.entropy->extrapolation}};
  else
    j["entropy"] = nullptr;
  return j;
}

std::string diagonal_csv(const DegreeTable& table) {
  std::ostringstream out;
  out << "k,d,log_d_over_2k\n";
  std::vector<long> d = diagonal(table);
  for (std::size_t k = 1; k < d.size(); ++k)
    out << k << ',' << d[k] << ',' << (d[k] > 0 ? std::log(double(d[k])) / (2.0 * k) : 0.0) << '\n';
  return out.str();
}

}  // namespace latdeg
