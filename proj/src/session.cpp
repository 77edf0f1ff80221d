#include "weil/session.hpp"

#include <sstream>

#include <json.hpp>

#include "weil/expr.hpp"
#include "weil/flat.hpp"
#include "weil/identity_suite.hpp"

namespace weil {

namespace {

using nlohmann::ordered_json;

const char* context_name(Context c) { return c == Context::Classical ? "classical" : "quantum"; }

const RepData& find_rep(const AlgebraBundle& b, const std::string& rep) {
  auto it = b.reps.find(rep);
  if (it == b.reps.end()) {
    std::string names;
    for (const auto& [k, v] : b.reps) names += (names.empty() ? "" : ", ") + k;
    throw Error("unknown representation '" + rep + "' for " + b.name + "; available: " + names);
  }
  return it->second;
}

// Validation of everything the chosen context needs; empty when fine.
std::string context_failures(const AlgebraBundle& b, const RepData& rep, Context ctx) {
  std::string out;
  auto note = [&](ValidationReport r, const std::string& subject) {
    r.subject = subject;
    if (!r.ok()) out += (out.empty() ? "" : "\n") + r.to_string();
  };
  note(validate_lie(b.lie), b.name + " lie algebra");
  note(validate_rep(b.lie, rep), b.name + " rep '" + rep.name + "'");
  if (ctx == Context::Quantum && b.form) note(validate_form(b.lie, *b.form), b.name + " bilinear form");
  return out;
}

std::shared_ptr<const QuantumAlgebra> make_quantum(const AlgebraBundle& b, const RepData& rep) {
  if (!b.form)
    throw Error(b.name + " has no invariant bilinear form; the quantum context needs B = identity");
  if (!b.form->B.is_identity())
    throw Error(b.name + ": the quantum context needs an orthonormal basis (B = identity)");
  return QuantumAlgebra::make(b.lie, b.form, rep);
}

std::string results_text(const std::string& header, const std::vector<IdentityResult>& rs) {
  std::ostringstream os;
  os << header << "\n";
  std::size_t passed = 0;
  for (const auto& r : rs) {
    os << (r.pass ? "pass  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
    passed += r.pass;
  }
  os << passed << "/" << rs.size() << " identities pass\n";
  return os.str();
}

ordered_json results_json(const std::vector<IdentityResult>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return arr;
}

std::vector<IdentityResult> run_suite(const AlgebraBundle& b, const RepData& rep,
                                      const SessionConfig& cfg) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  if (cfg.context == Context::Classical)
    return classical_suite(*ClassicalAlgebra::make(b.lie, rep), opts);
  auto rs = quantum_suite(*make_quantum(b, rep), opts);
  rs.push_back(pbw_confluence(b.lie, cfg.seed));
  return rs;
}

FlatReport run_flat(const AlgebraBundle& b, const RepData& rep, const SessionConfig& cfg) {
  if (cfg.context == Context::Classical)
    return flat_report(*ClassicalAlgebra::make(b.lie, rep), b.name, rep.name, cfg.max_degree,
                       cfg.seed);
  return flat_report(*make_quantum(b, rep), b.name, rep.name, cfg.max_degree, cfg.seed);
}

}  // namespace

AlgebraBundle open_bundle(const SessionConfig& cfg) {
  if (!cfg.builtin.empty() && !cfg.file.empty())
    throw Error("give either a builtin name or a file, not both");
  if (!cfg.builtin.empty()) return builtin(cfg.builtin);
  if (!cfg.file.empty()) return load_algebra_file(cfg.file);
  throw Error("no algebra selected (use a builtin name or a definition file)");
}

CommandResult cmd_validate(const AlgebraBundle& b, const SessionConfig& cfg) {
  std::vector<ValidationReport> reports;
  ValidationReport lie = validate_lie(b.lie);
  lie.subject = "lie algebra";
  reports.push_back(lie);
  if (b.form) {
    ValidationReport f = validate_form(b.lie, *b.form);
    f.subject = "bilinear form";
    reports.push_back(f);
  }
  for (const auto& [name, rep] : b.reps) {
    ValidationReport r = validate_rep(b.lie, rep);
    r.subject = "rep '" + name + "'";
    reports.push_back(r);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  CommandResult res;
  res.status = ok ? kOk : kFailure;
  if (cfg.json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "validate";
    j["algebra"] = b.name;
    j["dim"] = b.lie.dim();
    j["ok"] = ok;
    j["orthonormal"] = b.form && b.form->B.is_identity();
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json v = ordered_json::array();
      for (const auto& x : r.violations)
        v.push_back({{"kind", x.kind}, {"indices", x.indices}, {"message", x.message}});
      j["reports"].push_back({{"subject", r.subject}, {"ok", r.ok()}, {"violations", v}});
    }
    res.output = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << b.name << " (dim " << b.lie.dim() << "): " << (ok ? "valid" : "INVALID") << "\n";
    for (auto r : reports) {
      if (r.subject == "bilinear form" && r.ok())
        r.subject += r.orthonormal ? " (orthonormal)" : " (not orthonormal)";
      os << "  " << r.to_string() << "\n";
    }
    if (!b.form) os << "  bilinear form: none (classical context only)\n";
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_check(const AlgebraBundle& b, const SessionConfig& cfg) {
  const RepData& rep = find_rep(b, cfg.rep);
  CommandResult res;
  if (std::string bad = context_failures(b, rep, cfg.context); !bad.empty()) {
    res.status = kFailure;
    res.output = "validation failed; identity suite not run\n" + bad + "\n";
    return res;
  }
  auto rs = run_suite(b, rep, cfg);
  res.status = all_pass(rs) ? kOk : kFailure;
  if (cfg.json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["algebra"] = b.name;
    j["rep"] = rep.name;
    j["context"] = context_name(cfg.context);
    j["seed"] = cfg.seed;
    j["results"] = results_json(rs);
    j["ok"] = res.status == kOk;
    res.output = j.dump(2) + "\n";
  } else {
    res.output = results_text(b.name + " / " + rep.name + " (" + context_name(cfg.context) +
                                  "), seed " + std::to_string(cfg.seed),
                              rs);
  }
  return res;
}

CommandResult cmd_eval(const AlgebraBundle& b, const SessionConfig& cfg,
                       const std::string& expression) {
  const RepData& rep = find_rep(b, cfg.rep);
  if (std::string bad = context_failures(b, rep, cfg.context); !bad.empty())
    return {kFailure, "validation failed\n" + bad + "\n"};
  ExprPtr e = parse(expression);
  std::string out;
  if (cfg.context == Context::Classical)
    out = evaluate(*e, *ClassicalAlgebra::make(b.lie, rep)).to_string();
  else
    out = evaluate(*e, *make_quantum(b, rep)).to_string();
  if (cfg.json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "eval";
    j["expression"] = expression;
    j["result"] = out;
    return {kOk, j.dump(2) + "\n"};
  }
  return {kOk, out + "\n"};
}

CommandResult cmd_flat(const AlgebraBundle& b, const SessionConfig& cfg) {
  const RepData& rep = find_rep(b, cfg.rep);
  if (std::string bad = context_failures(b, rep, cfg.context); !bad.empty())
    return {kFailure, "validation failed\n" + bad + "\n"};
  FlatReport r = run_flat(b, rep, cfg);
  return {r.ok() ? kOk : kFailure, cfg.json ? to_json(r) : to_text(r)};
}

CommandResult cmd_report(const SessionConfig& cfg) {
  ordered_json entries = ordered_json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& name : builtin_names()) {
    AlgebraBundle b = builtin(name);
    for (const auto& [rep_name, rep] : b.reps) {
      for (Context ctx : {Context::Classical, Context::Quantum}) {
        if (ctx == Context::Quantum && !(b.form && b.form->B.is_identity())) continue;
        SessionConfig c = cfg;
        c.context = ctx;
        c.rep = rep_name;
        auto rs = run_suite(b, rep, c);
        FlatReport fr = run_flat(b, rep, c);
        bool good = all_pass(rs) && fr.ok();
        ok = ok && good;
        std::size_t passed = 0;
        for (const auto& r : rs) passed += r.pass;
        text << (good ? "pass  " : "FAIL  ") << name << " / " << rep_name << " ("
             << context_name(ctx) << "): " << passed << "/" << rs.size()
             << " identities; flat N=" << fr.N << " dims";
        for (const auto& row : fr.per_degree) text << " " << row.dim_flat;
        text << "\n";
        for (const auto& r : rs)
          if (!r.pass) text << "      FAIL " << r.name << ": " << r.detail << "\n";
        entries.push_back({{"algebra", name},
                           {"rep", rep_name},
                           {"context", context_name(ctx)},
                           {"check", results_json(rs)},
                           {"flat", ordered_json::parse(to_json(fr))},
                           {"ok", good}});
      }
    }
  }
  CommandResult res;
  res.status = ok ? kOk : kFailure;
  if (cfg.json) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "report";
    j["N"] = cfg.max_degree;
    j["seed"] = cfg.seed;
    j["entries"] = entries;
    j["ok"] = ok;
    res.output = j.dump(2) + "\n";
  } else {
    res.output = text.str();
  }
  return res;
}

}  // namespace weil
