#include "mhd/mhd.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "session.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <class F>
int guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return MHD_OK;
  } catch (const mhd::Error& e) {
    g_last_error = e.what();
    return e.code == 2 ? MHD_EINVAL : e.code == 3 ? MHD_EREGULARITY : MHD_ERR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MHD_ERR;
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct mhd_verifier {
  mhd::Session session;
  explicit mhd_verifier(const char* cfg) : session(cfg) {}
};

extern "C" {

int mhd_verifier_create(const char* config_json, mhd_verifier** out) {
  if (!out) return fail(MHD_EINVAL, "null output pointer");
  *out = nullptr;
  if (!config_json) return fail(MHD_EINVAL, "null config");
  return guarded([&] {
    *out = new mhd_verifier(config_json);
  });
}

int mhd_verifier_run(mhd_verifier* v) {
  if (!v) return fail(MHD_EINVAL, "null verifier");
  return guarded([&] { v->session.run(); });
}

int mhd_verifier_report_json(mhd_verifier* v, char** out) {
  if (!v || !out) return fail(MHD_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(v->session.json());
    if (!*out) throw mhd::Error(1, "out of memory");
  });
}

int mhd_verifier_report_text(mhd_verifier* v, char** out) {
  if (!v || !out) return fail(MHD_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(v->session.text());
    if (!*out) throw mhd::Error(1, "out of memory");
  });
}

int mhd_verifier_all_passed(mhd_verifier* v, int* out) {
  if (!v || !out) return fail(MHD_EINVAL, "null argument");
  if (!v->session.ran) return fail(MHD_EINVAL, "verifier has not run yet");
  *out = v->session.result.all_pass ? 1 : 0;
  return MHD_OK;
}

void mhd_verifier_destroy(mhd_verifier* v) { delete v; }

void mhd_string_free(char* s) { delete[] s; }

const char* mhd_last_error(void) { return g_last_error.c_str(); }

const char* mhd_version(void) { return "1.0.0"; }

}  // extern "C"
