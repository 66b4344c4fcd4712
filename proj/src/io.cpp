#include "abcapf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace abcapf {

namespace {

using nlohmann::json;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError("line " + std::to_string(line_no) + ": bad number '" +
                     text + "'");
  }
  return value;
}

std::string cell_label(const GridCell& cell) {
  std::string row{to_string(cell.algorithm)};
  row += ',';
  if (cell.algorithm == Algorithm::abc_apf) row += to_string(cell.config.proposal.kind);
  row += ',';
  row += to_string(cell.config.kernel.kind);
  row += ',';
  row += format_double(cell.tolerance());
  return row;
}

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw InputError(std::string("config: missing '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError(std::string("config: '") + key + "' must be a number");
  return v.get<double>();
}

std::size_t count_field(const json& obj, const char* key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(std::string("config: '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::string string_field(const json& obj, const char* key, const char* fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_string()) throw InputError(std::string("config: '") + key + "' must be a string");
  return v.get<std::string>();
}

GridCell parse_cell(const json& obj, std::size_t particles) {
  if (!obj.is_object()) throw InputError("config: grid entries must be objects");
  GridCell cell;
  cell.algorithm = parse_algorithm(string_field(obj, "algo", "abc-apf"));
  auto& c = cell.config;
  c.n_particles = count_field(obj, "particles", particles);
  c.proposal.kind = parse_proposal_kind(string_field(obj, "proposal", "shifted-t"));
  if (obj.contains("dof")) c.proposal.dof = number_field(obj, "dof");
  const char* default_kernel =
      cell.algorithm == Algorithm::abc_apf ? "gaussian" : "uniform";
  c.kernel.kind = parse_kernel_kind(string_field(obj, "kernel", default_kernel));
  if (obj.contains("eps")) c.kernel.epsilon = number_field(obj, "eps");
  if (obj.contains("smc_percentile")) {
    c.smc_percentile = number_field(obj, "smc_percentile");
  }
  c.resample_policy = parse_resample_policy(string_field(obj, "resample", "every"));
  c.resample_scheme = parse_resample_scheme(string_field(obj, "scheme", "multinomial"));
  validate(c);
  return cell;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_data_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,y,h_true\n";
  os << "0,," << format_double(traj.h.at(0)) << '\n';
  for (std::size_t t = 1; t <= traj.horizon(); ++t) {
    os << t << ',' << format_double(traj.y[t - 1]) << ','
       << format_double(traj.h.at(t)) << '\n';
  }
}

Trajectory read_data_csv(std::istream& is) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::string line;
  if (!std::getline(is, line)) throw InputError("data: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,y,h_true") throw InputError("data: expected header t,y,h_true");

  Trajectory traj;
  traj.h.push_back(nan);
  std::size_t line_no = 1;
  std::size_t expected_t = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 3) {
      throw InputError("data: line " + std::to_string(line_no) + " needs 3 fields");
    }
    const double t = parse_number(f[0], line_no);
    const double h = f[2].empty() ? nan : parse_number(f[2], line_no);
    if (t == 0.0 && expected_t == 0) {
      traj.h[0] = h;
      expected_t = 1;
      continue;
    }
    if (expected_t == 0) expected_t = 1;
    if (t != static_cast<double>(expected_t)) {
      throw InputError("data: line " + std::to_string(line_no) +
                       ": t out of sequence");
    }
    if (f[1].empty()) {
      throw InputError("data: line " + std::to_string(line_no) + ": missing y");
    }
    traj.y.push_back(parse_number(f[1], line_no));
    traj.h.push_back(h);
    ++expected_t;
  }
  if (traj.y.empty()) throw InputError("data: no observations");
  return traj;
}

void write_filtered_csv(std::ostream& os, const FilterOutput& out) {
  os << "t,h_est,ess\n";
  for (std::size_t i = 0; i < out.filtered_mean.size(); ++i) {
    os << i + 1 << ',' << format_double(out.filtered_mean[i]) << ','
       << format_double(out.ess_trace[i]) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const std::vector<GridCell>& grid,
                       const StudyResult& result) {
  os << "algo,proposal,kernel,eps,replicate,rmse,ae,seconds,degeneracies\n";
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const std::string label = cell_label(grid[c]);
    const auto& runs = result.runs[c];
    for (std::size_t r = 0; r < runs.size(); ++r) {
      os << label << ',' << r << ',' << format_double(runs[r].rmse) << ','
         << format_double(runs[r].ae) << ',' << format_double(runs[r].elapsed)
         << ',' << runs[r].degeneracy_count << '\n';
    }
  }
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const std::string label = cell_label(grid[c]);
    const auto& a = result.aggregates[c];
    const auto row = [&](const char* name, auto pick) {
      os << label << ',' << name << ',' << format_double(pick(a.rmse)) << ','
         << format_double(pick(a.ae)) << ',' << format_double(pick(a.seconds))
         << ',' << format_double(pick(a.degeneracies)) << '\n';
    };
    row("mean", [](const Summary& s) { return s.mean; });
    row("median", [](const Summary& s) { return s.median; });
    row("min", [](const Summary& s) { return s.min; });
    row("max", [](const Summary& s) { return s.max; });
  }
}

void write_boxplot_csv(std::ostream& os, const std::vector<GridCell>& grid,
                       const StudyResult& result) {
  os << "algo,proposal,kernel,eps,replicate,metric,value\n";
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const std::string label = cell_label(grid[c]);
    const auto& runs = result.runs[c];
    for (std::size_t r = 0; r < runs.size(); ++r) {
      os << label << ',' << r << ",rmse," << format_double(runs[r].rmse) << '\n';
      os << label << ',' << r << ",ae," << format_double(runs[r].ae) << '\n';
      os << label << ',' << r << ",seconds," << format_double(runs[r].elapsed)
         << '\n';
    }
  }
}

ResamplePolicy parse_resample_policy(const std::string& text) {
  if (text == "every") return ResamplePolicy::every_step();
  if (text.rfind("ess:", 0) == 0) {
    const std::string rest = text.substr(4);
    double n0 = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n0);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && n0 > 0.0) {
      return ResamplePolicy::ess_threshold(n0);
    }
  }
  throw InputError("resample policy must be 'every' or 'ess:N0', got '" + text + "'");
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config: top level must be an object");
  try {
    ExperimentConfig cfg(SvmParams(number_field(doc, "mu"), number_field(doc, "phi"),
                                   number_field(doc, "sigma_h"),
                                   number_field(doc, "alpha"),
                                   number_field(doc, "beta"),
                                   number_field(doc, "sigma_v")));
    cfg.horizon = count_field(doc, "horizon", cfg.horizon);
    cfg.particles = count_field(doc, "particles", cfg.particles);
    cfg.threads = count_field(doc, "threads", cfg.threads);
    if (doc.contains("grid")) {
      const auto& grid = doc.at("grid");
      if (!grid.is_array()) throw InputError("config: 'grid' must be a list");
      for (const auto& entry : grid) cfg.grid.push_back(parse_cell(entry, cfg.particles));
    }
    return cfg;
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace abcapf
