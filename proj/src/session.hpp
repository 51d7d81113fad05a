#pragma once

#include <string>

#include "verify.hpp"

namespace mhd {

// throws ConfigError on malformed JSON, wrong types, or unknown keys
RunConfig config_from_json(const std::string& text);

struct Session {
  RunConfig cfg;
  SuiteResult result;
  bool ran = false;

  explicit Session(const std::string& config_json) : cfg(config_from_json(config_json)) {
    validate(cfg);
  }
  void run();
  std::string json() const;
  std::string text() const;
};

}  // namespace mhd
