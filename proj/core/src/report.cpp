#include <cmath>
#include <limits>
#include <ostream>

#include "sphtopo/analytic.hpp"
#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"
#include "sphtopo/montecarlo.hpp"

namespace sphtopo::mc {

namespace {

constexpr double kZLimit = 3.0;
constexpr double kBandLow = 0.7;
constexpr double kBandHigh = 1.3;
constexpr double kVanishingWeight = 1e-12;

ThresholdInterval interval_of(const std::string& id) {
  const auto open = id.find('[');
  if (open == std::string::npos || id.size() < open + 2 || id.back() != ']') {
    throw DomainError("compare_to_theory: malformed column id '" + id + "'");
  }
  try {
    return ThresholdInterval::parse(id.substr(open + 1, id.size() - open - 2));
  } catch (const IoError& e) {
    throw DomainError("compare_to_theory: malformed column id '" + id + "'");
  }
}

constexpr const char* kBandLabel = "band[0.7:1.3]";

void ratio_row(ReportRow& row, bool vanishing) {
  row.stderr_or_ratio = row.empirical / row.theory;
  row.z_or_band = kBandLabel;
  if (vanishing) {
    row.status = "subleading-dominated";
  } else {
    const double r = row.stderr_or_ratio;
    row.status = (r >= kBandLow && r <= kBandHigh) ? "pass" : "fail";
  }
}

}  // namespace

std::vector<ReportRow> compare_to_theory(const MomentEstimate& estimate,
                                         const EnsembleConfig& config) {
  const int ell = config.ell;
  std::vector<ThresholdInterval> intervals;
  std::vector<double> weights;
  for (const auto& c : estimate.columns) {
    intervals.push_back(interval_of(c.id));
    weights.push_back(analytic::interval_weight(intervals.back()));
  }
  const auto vanishing = [&](std::size_t k) { return std::abs(weights[k]) <= kVanishingWeight; };

  std::vector<ReportRow> rows;
  for (std::size_t k = 0; k < estimate.columns.size(); ++k) {
    const auto& c = estimate.columns[k];
    ReportRow row{"mean", c.id, c.mean, analytic::expected_epc(ell, intervals[k]), c.se_mean, "", ""};
    const double diff = row.empirical - row.theory;
    double z = 0.0;
    if (row.stderr_or_ratio > 0.0) {
      z = diff / row.stderr_or_ratio;
    } else if (diff != 0.0) {
      z = std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    row.z_or_band = format_real(z);
    row.status = std::abs(z) <= kZLimit ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < estimate.columns.size(); ++k) {
    const auto& c = estimate.columns[k];
    ReportRow row{"variance", c.id, c.variance,
                  analytic::leading_covariance(ell, intervals[k], intervals[k]), 0.0, "", ""};
    ratio_row(row, vanishing(k));
    rows.push_back(std::move(row));
  }
  for (const auto& p : estimate.pairs) {
    const std::string label = estimate.columns[p.first].id + "|" + estimate.columns[p.second].id;
    ReportRow row{"covariance", label, p.covariance,
                  analytic::leading_covariance(ell, intervals[p.first], intervals[p.second]), 0.0,
                  "", ""};
    ratio_row(row, vanishing(p.first) || vanishing(p.second));
    rows.push_back(std::move(row));
  }
  for (const auto& p : estimate.pairs) {
    const std::string label = estimate.columns[p.first].id + "|" + estimate.columns[p.second].id;
    const double product = weights[p.first] * weights[p.second];
    const double predicted = product > 0.0 ? 1.0 : (product < 0.0 ? -1.0 : 0.0);
    ReportRow row{"correlation", label, p.correlation, predicted, p.se_correlation, "", ""};
    if (vanishing(p.first) || vanishing(p.second)) {
      row.z_or_band = "sign0";
      row.status = "subleading-dominated";
    } else if (p.degenerate) {
      row.z_or_band = predicted > 0.0 ? "sign+" : "sign-";
      row.status = "degenerate";
    } else {
      row.z_or_band = predicted > 0.0 ? "sign+" : "sign-";
      row.status = (p.correlation * predicted > 0.0) ? "pass" : "fail";
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < estimate.columns.size(); ++k) {
    const auto& c = estimate.columns[k];
    const double expectation = analytic::expected_epc(ell, intervals[k]);
    const double leading = analytic::leading_covariance(ell, intervals[k], intervals[k]);
    ReportRow row{"cv", c.id, std::sqrt(c.variance) / c.mean, std::sqrt(leading) / expectation,
                  0.0, "", ""};
    ratio_row(row, vanishing(k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "quantity,u_or_pair,empirical,theory,stderr_or_ratio,z_or_band,status\n";
  for (const auto& r : rows) {
    out << r.quantity << ',' << r.label << ',' << format_real(r.empirical) << ','
        << format_real(r.theory) << ',' << format_real(r.stderr_or_ratio) << ','
        << r.z_or_band << ',' << r.status << '\n';
  }
}

}  // namespace sphtopo::mc
