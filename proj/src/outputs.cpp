#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "femup/harness.hpp"

namespace femup {

namespace {

// Full-precision decimal formatting; %.17g round-trips every double, so
// equal records always serialize to identical bytes.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

}  // namespace

std::string trace_csv(const std::vector<RunRecord>& records) {
  std::string out = "algorithm,seed,iteration,best_cost,mean_cost\n";
  for (const auto& record : records) {
    for (std::size_t t = 0; t < record.best_cost.size(); ++t) {
      out += record.algorithm;
      out += ',';
      out += std::to_string(record.seed);
      out += ',';
      out += std::to_string(t + 1);
      out += ',';
      out += fmt(record.best_cost[t]);
      out += ',';
      out += fmt(record.mean_cost[t]);
      out += '\n';
    }
  }
  return out;
}

std::string params_csv(const BenchmarkSummary& summary) {
  std::string out = "algorithm,rho,vtp_imin,l_imin,l_imax,l_itors,r_imin,r_imax,r_itors\n";
  for (const auto& algo : summary.per_algorithm) {
    out += algo.algorithm;
    for (double v : algo.mean_parameters) {
      out += ',';
      out += fmt(v);
    }
    out += '\n';
  }
  return out;
}

std::string summary_json(const BenchmarkSummary& summary) {
  nlohmann::json root;
  root["trials"] = summary.trials;
  root["max_iter"] = summary.max_iter;
  root["population_size"] = summary.population_size;
  root["algorithms"] = nlohmann::json::array();
  for (const auto& algo : summary.per_algorithm) {
    nlohmann::json a;
    a["algorithm"] = algo.algorithm;
    a["trials_requested"] = algo.trials_requested;
    a["trials_completed"] = algo.trials_completed;
    a["trials_failed"] = algo.trials_failed;
    a["mean_final_cost"] = algo.mean_final_cost;
    a["std_final_cost"] = algo.std_final_cost;
    a["mean_initial_cost"] = algo.mean_initial_cost;
    a["mean_parameters"] = algo.mean_parameters;
    a["mean_mode_errors"] = algo.mean_mode_errors;
    a["mean_best_trace"] = algo.mean_best_trace;
    root["algorithms"].push_back(std::move(a));
  }
  return root.dump(2) + "\n";
}

void emit_outputs(const BenchmarkSummary& summary, const std::vector<RunRecord>& records,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec && !std::filesystem::is_directory(out_dir))
    throw std::runtime_error("cannot create output directory " + out_dir.string());
  write_file(out_dir / "trace.csv", trace_csv(records));
  write_file(out_dir / "summary.json", summary_json(summary));
  write_file(out_dir / "params.csv", params_csv(summary));
}

}  // namespace femup
