#include "qgeom/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qgeom {
namespace {

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        dump_into(j[k], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

// Field order mirrors UncertaintyReport.
template <typename Fn>
void for_each_report_field(const UncertaintyReport& r, Fn&& fn) {
  fn("delta_a", r.delta_a);
  fn("delta_b", r.delta_b);
  fn("area", r.area);
  fn("metric_term", r.metric_term);
  fn("commutator_half", r.commutator_half);
  fn("anticommutator_half", r.anticommutator_half);
  fn("identity_residual", r.identity_residual);
  fn("theta", r.theta);
  fn("robertson_slack", r.robertson_slack);
  fn("schrodinger_slack", r.schrodinger_slack);
  fn("area_bound_slack", r.area_bound_slack);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json to_json(const UncertaintyReport& r) {
  Json j = Json::object();
  for_each_report_field(r, [&](const char* name, double v) { j[name] = v; });
  return j;
}

Json to_json(const TriangleReport& r) {
  Json j = Json::object();
  j["d_phi_a"] = r.d_phi_a;
  j["d_phi_b"] = r.d_phi_b;
  j["d_a_b"] = r.d_a_b;
  j["slack"] = r.slack;
  return j;
}

Json to_json(const MinimalConditionResult& m) {
  Json j = Json::object();
  j["lambda"] = Json::array({m.lambda.real(), m.lambda.imag()});
  j["residual"] = m.residual;
  j["re_lambda"] = m.re_lambda;
  j["is_minimal"] = m.is_minimal;
  return j;
}

Json state_to_json(const State& s) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    arr.push_back(Json::array({s.amplitudes()(k).real(),
                               s.amplitudes()(k).imag()}));
  }
  return arr;
}

Json to_json(const OptimizeResult& r) {
  Json j = Json::object();
  j["state"] = state_to_json(r.state);
  j["value"] = r.value;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["objective_trace"] = r.objective_trace;
  j["seed"] = r.seed;
  j["restart"] = r.restart;
  return j;
}

void write_report_csv(const UncertaintyReport& r, std::ostream& os) {
  std::string header;
  std::string row;
  for_each_report_field(r, [&](const char* name, double v) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += name;
    row += format_double(v);
  });
  os << header << '\n' << row << '\n';
}

void write_flow_csv(const FlowTrace& trace, std::ostream& os) {
  const Eigen::Index n = trace.states.empty() ? 0 : trace.states.front().dim();
  os << 't';
  for (Eigen::Index k = 0; k < n; ++k) os << ",re" << k << ",im" << k;
  os << ",fs_speed,std_dev\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    os << format_double(trace.times[i]);
    const CVector& amps = trace.states[i].amplitudes();
    for (Eigen::Index k = 0; k < n; ++k) {
      os << ',' << format_double(amps(k).real()) << ','
         << format_double(amps(k).imag());
    }
    os << ',' << format_double(trace.fs_speeds[i]) << ','
       << format_double(trace.std_devs[i]) << '\n';
  }
}

}  // namespace qgeom
