// weil: command-line front end over the C interface.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weil/weil.h"

namespace {

struct Args {
  std::string builtin;
  std::string file;
  std::string rep = "adjoint";
  bool classical = false;
  bool quantum = false;
  unsigned max_degree = 2;
  bool json = false;
  std::uint64_t seed = 1;
  std::string expression;
  std::string positional_file;
  bool all_builtins = false;
};

void add_source(CLI::App* cmd, Args& a) {
  auto* b = cmd->add_option("--builtin", a.builtin, "builtin algebra: abelian(n), heisenberg3, so3, sl2");
  auto* f = cmd->add_option("--file", a.file, "JSON algebra definition file");
  b->excludes(f);
}

void add_context(CLI::App* cmd, Args& a) {
  cmd->add_option("--rep", a.rep, "representation name")->capture_default_str();
  auto* c = cmd->add_flag("--classical", a.classical, "classical covariant Weil algebra (default)");
  auto* q = cmd->add_flag("--quantum", a.quantum, "quantum covariant Weil algebra");
  c->excludes(q);
}

void add_output(CLI::App* cmd, Args& a) {
  cmd->add_flag("--json", a.json, "JSON output");
  cmd->add_option("--seed", a.seed, "random seed for sampled checks")->capture_default_str();
}

int exit_code(weil_status s) {
  switch (s) {
    case WEIL_OK: return 0;
    case WEIL_FAILURE: return 1;
    case WEIL_ERROR: return 2;
    case WEIL_INTERNAL: return 1;
  }
  return 1;
}

// Prints the command output (if any) and any error; returns the exit code.
int finish(weil_status s, char* out) {
  if (out) {
    std::fputs(out, stdout);
    weil_string_free(out);
  } else if (s != WEIL_OK) {
    std::fprintf(stderr, "weil: %s\n", weil_last_error());
  }
  return exit_code(s);
}

int open_session(const Args& a, weil_session** s) {
  std::string file = a.file.empty() ? a.positional_file : a.file;
  if (!a.builtin.empty() && !file.empty()) {
    std::fprintf(stderr, "weil: give either --builtin or a file, not both\n");
    return 2;
  }
  weil_status st;
  if (!a.builtin.empty())
    st = weil_open_builtin(a.builtin.c_str(), s);
  else if (!file.empty())
    st = weil_open_file(file.c_str(), s);
  else {
    std::fprintf(stderr, "weil: no algebra selected (use --builtin NAME or --file PATH)\n");
    return 2;
  }
  if (st != WEIL_OK) {
    // Invalid structure constants: the report goes to stdout like validate's.
    if (st == WEIL_FAILURE)
      std::printf("%s\n", weil_last_error());
    else
      std::fprintf(stderr, "weil: %s\n", weil_last_error());
    return exit_code(st);
  }
  return 0;
}

weil_options options(const Args& a) {
  weil_options o = weil_default_options();
  o.rep = a.rep.c_str();
  o.quantum = a.quantum ? 1 : 0;
  o.max_degree = a.max_degree;
  o.json = a.json ? 1 : 0;
  o.seed = a.seed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in classical and quantum covariant Weil algebras"};
  app.set_version_flag("--version", std::string(weil_version()));
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "validate an algebra definition");
  validate->add_option("path", a.positional_file, "JSON algebra definition file");
  add_source(validate, a);
  validate->add_flag("--json", a.json, "JSON output");

  auto* check = app.add_subcommand("check", "run the identity suite");
  add_source(check, a);
  add_context(check, a);
  add_output(check, a);

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  add_source(eval, a);
  add_context(eval, a);
  eval->add_flag("--json", a.json, "JSON output");
  eval->add_option("expression", a.expression, "expression to evaluate")->required();

  auto* flat = app.add_subcommand("flat", "basic and flat subspaces up to a degree");
  add_source(flat, a);
  add_context(flat, a);
  add_output(flat, a);
  flat->add_option("--max-degree", a.max_degree, "truncation degree N")->capture_default_str();

  auto* report = app.add_subcommand("report", "check and flat over the builtin catalog");
  report->add_flag("--all-builtins", a.all_builtins, "run over every builtin (the default)");
  report->add_option("--max-degree", a.max_degree, "truncation degree N")->capture_default_str();
  add_output(report, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const weil_options opt = options(a);
  char* out = nullptr;

  if (report->parsed()) {
    weil_status st = weil_report(&opt, &out);
    return finish(st, out);
  }

  weil_session* s = nullptr;
  if (int rc = open_session(a, &s); rc != 0) return rc;
  weil_status st;
  if (validate->parsed())
    st = weil_validate(s, &opt, &out);
  else if (check->parsed())
    st = weil_check(s, &opt, &out);
  else if (eval->parsed())
    st = weil_eval(s, &opt, a.expression.c_str(), &out);
  else
    st = weil_flat(s, &opt, &out);
  weil_session_free(s);
  return finish(st, out);
}
