#include "session.hpp"

#include <json.hpp>

#include "errors.hpp"
#include "report.hpp"

namespace mhd {

RunConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config json: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a json object");
  RunConfig cfg;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "instance") cfg.instance = val.get<std::string>();
      else if (key == "group") cfg.group = val.get<std::string>();
      else if (key == "field") cfg.field = val.get<std::string>();
      else if (key == "taft_m") cfg.taft_m = val.get<std::int64_t>();
      else if (key == "taft_i") cfg.taft_i = val.get<std::int64_t>();
      else if (key == "taft_lambda") cfg.taft_lambda = val.get<std::string>();
      else if (key == "window") cfg.window = val.get<std::int64_t>();
      else if (key == "samples") cfg.samples = val.get<std::int64_t>();
      else if (key == "seed") cfg.seed = val.get<std::uint64_t>();
      else if (key == "suite") cfg.suite = val.get<std::vector<std::string>>();
      else if (key == "corrupt") cfg.corrupt = val.get<std::string>();
      else if (key == "threads") val.get<std::int64_t>();  // accepted, engine is serial
      else throw ConfigError("unknown config key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

void Session::run() {
  result = run_suite(cfg);
  ran = true;
}

std::string Session::json() const {
  if (!ran) throw DomainError("verifier has not run yet");
  return report_json(cfg, result);
}

std::string Session::text() const {
  if (!ran) throw DomainError("verifier has not run yet");
  return report_text(cfg, result);
}

}  // namespace mhd
