#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "mhd/mhd.h"

int main(int argc, char** argv) {
  CLI::App app{"Builds a double from a paired presentation and verifies its identities"};

  std::string instance = "group";
  std::string group = "sym:3";
  std::string field = "rational";
  std::int64_t taft_m = 2, taft_i = 1;
  std::string taft_lambda;
  std::int64_t window = 8;
  std::string samples = "exhaustive";
  std::uint64_t seed = 1;
  std::vector<std::string> suite;
  std::string corrupt;
  std::string report = "text";
  std::string output;
  std::int64_t threads = 1;

  app.add_option("--instance", instance, "group or qtaft")
      ->check(CLI::IsMember({"group", "qtaft"}))
      ->capture_default_str();
  app.add_option("--group", group, "zn:<n>, sym:<n>, dihedral:<n>, or z")
      ->capture_default_str();
  app.add_option("--field", field, "rational or fq:<p>")->capture_default_str();
  app.add_option("--taft-m", taft_m, "order of the grouplike symmetry")
      ->capture_default_str();
  app.add_option("--taft-i", taft_i, "power twisting the skew primitive")
      ->capture_default_str();
  app.add_option("--taft-lambda", taft_lambda,
                 "root of unity literal; derived from m, i, field when absent");
  app.add_option("--window,--truncate", window, "basis truncation window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--samples", samples,
                 "tuple count per check, or 'exhaustive' where feasible")
      ->capture_default_str();
  app.add_option("--seed", seed, "sampling seed")
      ->envname("MHD_SEED")
      ->capture_default_str();
  app.add_option("--suite", suite, "check names to run, or 'all'")->delimiter(',');
  app.add_option("--corrupt", corrupt,
                 "deliberately break one structure map: drop_antipode, "
                 "delta_not_cop, swap_coaction_b, or trivial_braiding");
  app.add_option("--report", report, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_option("--threads", threads, "accepted for compatibility; runs are serial")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", mhd_version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::int64_t sample_count = -1;
  if (samples != "exhaustive") {
    try {
      std::size_t used = 0;
      sample_count = std::stoll(samples, &used);
      if (used != samples.size() || sample_count < 1) throw std::invalid_argument(samples);
    } catch (const std::exception&) {
      std::cerr << "error: --samples wants a positive integer or 'exhaustive'\n";
      return 2;
    }
  }

  nlohmann::json cfg;
  cfg["instance"] = instance;
  cfg["field"] = field;
  cfg["window"] = window;
  cfg["samples"] = sample_count;
  cfg["seed"] = seed;
  cfg["threads"] = threads;
  if (instance == "group") {
    cfg["group"] = group;
  } else {
    cfg["taft_m"] = taft_m;
    cfg["taft_i"] = taft_i;
    if (!taft_lambda.empty()) cfg["taft_lambda"] = taft_lambda;
  }
  if (!corrupt.empty()) cfg["corrupt"] = corrupt;
  std::vector<std::string> named;
  for (const auto& s : suite)
    if (s != "all") named.push_back(s);
  if (!named.empty()) cfg["suite"] = named;

  mhd_verifier* v = nullptr;
  if (mhd_verifier_create(cfg.dump().c_str(), &v) != MHD_OK) {
    std::cerr << "error: " << mhd_last_error() << "\n";
    return 2;
  }
  if (mhd_verifier_run(v) != MHD_OK) {
    std::cerr << "error: " << mhd_last_error() << "\n";
    mhd_verifier_destroy(v);
    return 2;
  }

  char* text = nullptr;
  int rc = report == "json" ? mhd_verifier_report_json(v, &text)
                            : mhd_verifier_report_text(v, &text);
  if (rc != MHD_OK) {
    std::cerr << "error: " << mhd_last_error() << "\n";
    mhd_verifier_destroy(v);
    return 2;
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << output << "\n";
      mhd_string_free(text);
      mhd_verifier_destroy(v);
      return 2;
    }
    f << text;
  }
  mhd_string_free(text);

  int ok = 0;
  if (mhd_verifier_all_passed(v, &ok) != MHD_OK) {
    std::cerr << "error: " << mhd_last_error() << "\n";
    mhd_verifier_destroy(v);
    return 2;
  }
  mhd_verifier_destroy(v);
  return ok ? 0 : 1;
}
