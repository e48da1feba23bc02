#include <cstdio>

#include <json.hpp>

#include "cubic_mw/tgs.hpp"

namespace cubic_mw {

std::string format_table_row(const TGSReport& report) {
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.1f", report.percentage());
  std::string row = std::to_string(report.height_bound) + ' ' + std::to_string(report.n) + ' ' +
                    std::to_string(report.generated_count) + ' ' + pct + ' ' +
                    std::to_string(report.iterations) + ' ';
  if (report.first_bad) {
    row += std::to_string(report.first_bad->index) + ' ' + std::to_string(report.first_bad->hsum);
  } else {
    row += "- -";
  }
  return row;
}

std::string report_to_json(const TGSReport& report, std::string_view surface_label,
                           std::int64_t hsum_bound) {
  nlohmann::ordered_json j;
  j["surface_label"] = surface_label;
  j["n"] = report.n;
  j["hsum_bound"] = hsum_bound;
  j["initial_set"] = report.initial_set;
  j["generated_count"] = report.generated_count;
  j["percentage"] = report.percentage();
  j["iterations"] = report.iterations;
  if (report.first_bad) {
    j["first_bad"] = {{"index", report.first_bad->index}, {"hsum", report.first_bad->hsum}};
  } else {
    j["first_bad"] = nullptr;
  }
  j["per_iteration_added"] = report.per_iteration_added;
  return j.dump(2);
}

}  // namespace cubic_mw
