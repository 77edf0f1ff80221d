#include <cstdlib>
#include <cstring>
#include <string>

#include "weil/quantum.hpp"
#include "weil/session.hpp"
#include "weil/weil.h"

struct weil_session {
  weil::AlgebraBundle bundle;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

weil::SessionConfig config(const weil_options* opt) {
  weil::SessionConfig cfg;
  weil_options o = opt ? *opt : weil_default_options();
  if (o.rep) cfg.rep = o.rep;
  cfg.context = o.quantum ? weil::Context::Quantum : weil::Context::Classical;
  cfg.max_degree = o.max_degree;
  cfg.json = o.json != 0;
  cfg.seed = o.seed;
  return cfg;
}

// Runs f, translating exceptions into statuses and last_error.
template <class F>
weil_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const weil::ValidationFailure& e) {
    last_error = e.what();
    return WEIL_FAILURE;
  } catch (const weil::ConsistencyError& e) {
    last_error = std::string("internal consistency error: ") + e.what();
    return WEIL_INTERNAL;
  } catch (const weil::Error& e) {
    last_error = e.what();
    return WEIL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WEIL_INTERNAL;
  }
}

weil_status deliver(const weil::CommandResult& r, char** out) {
  if (out) *out = dup(r.output);
  if (r.status != weil::kOk) last_error = r.output;
  return static_cast<weil_status>(r.status);
}

}  // namespace

extern "C" {

const char* weil_version(void) { return "0.1.0"; }

weil_options weil_default_options(void) { return weil_options{nullptr, 0, 2, 0, 1}; }

const char* weil_last_error(void) { return last_error.c_str(); }

void weil_string_free(char* s) { std::free(s); }

weil_status weil_builtin_names(char** out) {
  return guarded([&] {
    std::string s;
    for (const auto& n : weil::builtin_names()) s += n + "\n";
    if (out) *out = dup(s);
    return WEIL_OK;
  });
}

weil_status weil_open_builtin(const char* name, weil_session** out) {
  return guarded([&] {
    if (!name || !out) throw weil::Error("null argument");
    *out = new weil_session{weil::builtin(name)};
    return WEIL_OK;
  });
}

weil_status weil_open_file(const char* path, weil_session** out) {
  return guarded([&] {
    if (!path || !out) throw weil::Error("null argument");
    *out = new weil_session{weil::load_algebra_file(path)};
    return WEIL_OK;
  });
}

void weil_session_free(weil_session* s) { delete s; }

weil_status weil_validate(const weil_session* s, const weil_options* opt, char** out) {
  return guarded([&] {
    if (!s) throw weil::Error("null session");
    return deliver(weil::cmd_validate(s->bundle, config(opt)), out);
  });
}

weil_status weil_check(const weil_session* s, const weil_options* opt, char** out) {
  return guarded([&] {
    if (!s) throw weil::Error("null session");
    return deliver(weil::cmd_check(s->bundle, config(opt)), out);
  });
}

weil_status weil_eval(const weil_session* s, const weil_options* opt, const char* expression,
                      char** out) {
  return guarded([&] {
    if (!s || !expression) throw weil::Error("null argument");
    return deliver(weil::cmd_eval(s->bundle, config(opt), expression), out);
  });
}

weil_status weil_flat(const weil_session* s, const weil_options* opt, char** out) {
  return guarded([&] {
    if (!s) throw weil::Error("null session");
    return deliver(weil::cmd_flat(s->bundle, config(opt)), out);
  });
}

weil_status weil_report(const weil_options* opt, char** out) {
  return guarded([&] { return deliver(weil::cmd_report(config(opt)), out); });
}

}  // extern "C"
