#include "nlslab/trace.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "nlslab/io.hpp"

namespace nlslab {

std::string energy_trace_csv(const EnergyTrace& trace) {
  std::string out = "t,mass,energy,P,calE,h1_W,l3_W,h12_W\n";
  for (const auto& row : trace.rows) {
    out += format_double(row.t);
    for (double v : {row.mass, row.energy, row.P, row.calE, row.h1_W, row.l3_W, row.h12_W}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string energy_trace_summary_json(const EnergyTrace& trace) {
  nlohmann::json summary;
  summary["rows"] = trace.rows.size();
  if (!trace.rows.empty()) {
    summary["t_min"] = std::min(trace.rows.front().t, trace.rows.back().t);
    summary["t_max"] = std::max(trace.rows.front().t, trace.rows.back().t);
    const auto column = [&](const char* name, double EnergyTrace::Row::* member) {
      double lo = trace.rows.front().*member, hi = lo;
      for (const auto& row : trace.rows) {
        lo = std::min(lo, row.*member);
        hi = std::max(hi, row.*member);
      }
      const double first = trace.rows.front().*member;
      nlohmann::json col;
      col["min"] = lo;
      col["max"] = hi;
      col["drift"] = (first != 0.0) ? (hi - lo) / std::abs(first) : (hi - lo);
      summary[name] = col;
    };
    column("mass", &EnergyTrace::Row::mass);
    column("energy", &EnergyTrace::Row::energy);
    column("P", &EnergyTrace::Row::P);
    column("calE", &EnergyTrace::Row::calE);
    column("h1_W", &EnergyTrace::Row::h1_W);
    column("l3_W", &EnergyTrace::Row::l3_W);
    column("h12_W", &EnergyTrace::Row::h12_W);
  }
  summary["history_integral"] = trace.history.integral;
  summary["history_samples"] = trace.history.times.size();
  return summary.dump(2);
}

}  // namespace nlslab
