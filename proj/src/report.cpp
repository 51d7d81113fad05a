#include "report.hpp"

#include <json.hpp>
#include <sstream>

namespace mhd {

std::string report_json(const RunConfig& cfg, const SuiteResult& res) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["instance"] = cfg.instance;
  j["field"] = cfg.field;
  if (cfg.instance == "group") {
    j["group"] = cfg.group;
  } else {
    j["taft"] = {{"m", cfg.taft_m}, {"i", cfg.taft_i}, {"lambda", res.resolved_lambda}};
  }
  j["seed"] = cfg.seed;
  j["window"] = cfg.window;
  j["samples_mode"] = res.exhaustive ? "exhaustive" : "seeded";
  j["corrupt"] = cfg.corrupt;
  j["all_pass"] = res.all_pass;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ck : res.checks) {
    nlohmann::json c;
    c["name"] = ck.name;
    c["samples"] = ck.samples;
    c["active"] = ck.active;
    c["failure_count"] = ck.failure_count;
    c["pass"] = ck.pass;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : ck.failures)
      fs.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    c["failures"] = fs;
    c["notes"] = ck.notes;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_text(const RunConfig& cfg, const SuiteResult& res) {
  std::ostringstream os;
  os << "instance " << cfg.instance;
  if (cfg.instance == "group") {
    os << " " << cfg.group;
  } else {
    os << " m=" << cfg.taft_m << " i=" << cfg.taft_i << " lambda=" << res.resolved_lambda;
  }
  os << " over " << cfg.field << ", seed " << cfg.seed << ", window " << cfg.window
     << ", " << (res.exhaustive ? "exhaustive" : "seeded");
  if (!cfg.corrupt.empty()) os << ", corrupt " << cfg.corrupt;
  os << "\n\n";
  os << "check                        samples     active   failures  result\n";
  for (const auto& ck : res.checks) {
    std::string name = ck.name;
    if (name.size() < 26) name.resize(26, ' ');
    std::string s = std::to_string(ck.samples), a = std::to_string(ck.active),
                f = std::to_string(ck.failure_count);
    os << name << std::string(s.size() < 9 ? 9 - s.size() : 0, ' ') << s
       << std::string(a.size() < 11 ? 11 - a.size() : 0, ' ') << a
       << std::string(f.size() < 11 ? 11 - f.size() : 0, ' ') << f << "  "
       << (ck.pass ? "pass" : "FAIL") << "\n";
  }
  os << "\noverall: " << (res.all_pass ? "PASS" : "FAIL") << "\n";
  for (const auto& ck : res.checks) {
    if (ck.notes.empty() && ck.failures.empty()) continue;
    os << "\n" << ck.name << ":\n";
    for (const auto& n : ck.notes) os << "  note: " << n << "\n";
    for (const auto& f : ck.failures) {
      os << "  at " << f.inputs << "\n";
      os << "    lhs: " << f.lhs << "\n";
      os << "    rhs: " << f.rhs << "\n";
    }
  }
  return os.str();
}

}  // namespace mhd
