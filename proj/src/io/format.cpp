#include "sturmlab/io/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sturmlab::io {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> header)
    : os_(os), width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
  os_ << '\n';
}

CsvWriter& CsvWriter::cell(std::string_view s) {
  if (s.find_first_of(",\n\"") != std::string_view::npos)
    throw std::invalid_argument("csv cell contains a separator: " + std::string(s));
  os_ << (filled_++ ? "," : "") << s;
  return *this;
}

CsvWriter& CsvWriter::cell(double x) { return cell(format_real(x)); }
CsvWriter& CsvWriter::cell(std::int64_t x) { return cell(std::to_string(x)); }
CsvWriter& CsvWriter::cell(bool b) { return cell(std::string_view(b ? "true" : "false")); }

void CsvWriter::end_row() {
  if (filled_ != width_)
    throw std::logic_error("csv row has " + std::to_string(filled_) + " cells, header has " +
                           std::to_string(width_));
  os_ << '\n';
  filled_ = 0;
}

namespace {

json int_to_json(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-+0123456789") != std::string::npos)
      throw std::invalid_argument("not an integer: \"" + s + "\"");
    return Int(s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

json quad_to_json(const Quad& x) {
  return json::array({int_to_json(x.p()), int_to_json(x.q()), int_to_json(x.r()), int_to_json(x.d())});
}

Quad parse_quad(std::string_view s) {
  json arr = json::array();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    auto part = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    arr.push_back(std::string(part));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return quad_from_json(arr);
}

Quad quad_from_json(const json& j) {
  if (j.is_string()) return parse_quad(j.get<std::string>());
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("a quadratic irrational is (p,q,r,d), got " + j.dump());
  return Quad::make(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]),
                    int_from_json(j[3]));
}

void write_hitting_csv(std::ostream& os, const std::vector<ergodicity::HittingResult>& rows) {
  CsvWriter w(os, {"k", "n_bracket", "case_id", "hits", "bound", "pass"});
  for (const auto& r : rows) {
    w.cell(r.k).cell(r.n_bracket).cell(r.case_id).cell(r.hits).cell(r.bound).cell(r.pass);
    w.end_row();
  }
}

void write_density_csv(std::ostream& os, const hamiltonian::DensityEstimate& est) {
  CsvWriter w(os, {"window_size", "energy", "density"});
  for (std::size_t i = 0; i < est.window_sizes.size(); ++i) {
    w.cell(est.window_sizes[i]).cell(est.per_window_energy[i]).cell(est.per_window[i]);
    w.end_row();
  }
}

void write_stability_csv(std::ostream& os, const std::vector<stability::StabilityRecord>& rows) {
  CsvWriter w(os, {"kind", "parameter", "base_density", "perturbation_gain", "margin", "pass",
                   "tail_bound", "min_density"});
  for (const auto& r : rows) {
    w.cell(r.kind).cell(r.parameter).cell(r.base_density).cell(r.perturbation_gain);
    w.cell(r.margin).cell(r.pass).cell(r.tail_bound).cell(r.min_density);
    w.end_row();
  }
}

json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json fit_to_json(const stability::ScalingFit& fit) {
  return {{"exponent", real(fit.exponent)},
          {"intercept", real(fit.intercept)},
          {"r_squared", real(fit.r_squared)},
          {"size_lo", real(fit.size_lo)},
          {"size_hi", real(fit.size_hi)},
          {"points", fit.points},
          {"predicted_exponent", real(fit.predicted_exponent)},
          {"deviation", real(fit.deviation())}};
}

json summary_json(const ergodicity::HittingScan& scan) {
  json j = {{"d", scan.d}, {"r_empirical", real(scan.r_empirical)}, {"k_star", nullptr}};
  if (scan.k_star) j["k_star"] = *scan.k_star;
  std::int64_t fails = 0;
  for (const auto& r : scan.results) fails += !r.pass;
  j["scanned"] = scan.results.size();
  j["failures"] = fails;
  return j;
}

json summary_json(const stability::PeriodicScan& scan) {
  json j = {{"alpha", real(scan.alpha)},
            {"lambda", real(scan.lambda)},
            {"n_patterns", scan.n_patterns},
            {"m", scan.m},
            {"frequency_floor", real(scan.frequency_floor)},
            {"k_star", nullptr},
            {"lambda_star", real(scan.lambda_star)},
            {"fit", nullptr}};
  if (scan.k_star) j["k_star"] = *scan.k_star;
  if (scan.fit) j["fit"] = fit_to_json(*scan.fit);
  std::int64_t fails = 0;
  for (const auto& r : scan.records) fails += !r.pass;
  j["failures"] = fails;
  json ex = json::array();
  for (const auto& e : scan.exclusions)
    ex.push_back({{"k", e.k}, {"factor", e.factor}, {"ones_frequency", real(e.ones_frequency)}});
  j["exclusions"] = ex;
  return j;
}

json summary_json(const stability::FamilyScan& scan) {
  json j = {{"alpha", real(scan.alpha)},
            {"lambda", real(scan.lambda)},
            {"n_star", nullptr},
            {"c1", real(scan.c1)},
            {"lambda_threshold", real(scan.lambda_threshold)},
            {"fit", nullptr}};
  if (scan.n_star) j["n_star"] = *scan.n_star;
  if (scan.fit) j["fit"] = fit_to_json(*scan.fit);
  std::int64_t fails = 0, unconverged = 0;
  for (const auto& r : scan.records) {
    fails += !r.pass;
    unconverged += !r.converged;
  }
  j["failures"] = fails;
  j["unconverged"] = unconverged;
  return j;
}

json summary_json(const hamiltonian::DensityEstimate& est) {
  return {{"value", real(est.value)},
          {"is_exact", est.is_exact},
          {"tail_bound", real(est.tail_bound)},
          {"horizon", est.horizon}};
}

}  // namespace sturmlab::io
