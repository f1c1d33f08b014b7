#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sturmlab/ergodicity/hitting.hpp"
#include "sturmlab/hamiltonian/density.hpp"
#include "sturmlab/stability/stability.hpp"
#include "sturmlab/torus/quadratic.hpp"

namespace sturmlab::io {

using nlohmann::json;
using torus::Quad;

/// Shortest-form double with 17 significant digits, '.' decimal, no locale.
std::string format_real(double x);

/// Comma-separated rows under a header. Cells never contain commas.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::vector<std::string> header);

  CsvWriter& cell(std::string_view s);
  CsvWriter& cell(double x);
  CsvWriter& cell(std::int64_t x);
  CsvWriter& cell(int x) { return cell(static_cast<std::int64_t>(x)); }
  CsvWriter& cell(bool b);
  /// Throws std::logic_error when the row width differs from the header.
  void end_row();

 private:
  std::ostream& os_;
  std::size_t width_;
  std::size_t filled_ = 0;
};

/// (p, q, r, d) as a JSON array of decimal strings or integers.
json quad_to_json(const Quad& x);
/// Accepts [p, q, r, d] with integer or string entries, or a string "p,q,r,d".
Quad quad_from_json(const json& j);
/// "p,q,r,d"
Quad parse_quad(std::string_view s);

void write_hitting_csv(std::ostream& os, const std::vector<ergodicity::HittingResult>& rows);
void write_density_csv(std::ostream& os, const hamiltonian::DensityEstimate& est);
void write_stability_csv(std::ostream& os, const std::vector<stability::StabilityRecord>& rows);

json fit_to_json(const stability::ScalingFit& fit);
json summary_json(const ergodicity::HittingScan& scan);
json summary_json(const stability::PeriodicScan& scan);
json summary_json(const stability::FamilyScan& scan);
json summary_json(const hamiltonian::DensityEstimate& est);

/// JSON doubles are written through format_real as raw numbers; infinity and
/// NaN become null.
json real(double x);

}  // namespace sturmlab::io
