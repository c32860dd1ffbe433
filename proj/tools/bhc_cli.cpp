// Command-line front end. Talks to the library only through bhc.h.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bhc.h"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2, kCap = 3;

struct Check {
  std::string section, name, witness, detail;
  bool passed = false, required = true;
};

struct Table {
  std::string name;
  std::vector<std::size_t> values;  // indexed by degree
};

struct Run {
  std::vector<std::string> command;
  std::string input, digest;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::vector<std::string> lines;  // extra text-mode lines
  int status = kPass;
  std::string error_code, error;
  double ms = 0;
};

// thrown out of the command bodies when the library reports an error
struct Failure {
  bhc_status code;
  std::string message;
};

void ok(bhc_status s) {
  if (s != BHC_OK) throw Failure{s, bhc_last_error()};
}

int exit_for(bhc_status s) {
  switch (s) {
    case BHC_E_CAP_EXCEEDED:
      return kCap;
    case BHC_E_CALIBRATION_FAILED:
    case BHC_E_RESTRICTION_UNDEFINED:
    case BHC_E_INDUCED_MAP_UNDEFINED:
      return kFail;
    default:
      return kInput;
  }
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
  return buf;
}

struct Entry {
  bhc_entry* e = nullptr;
  Entry(const std::string& input, Run& run) {
    ok(bhc_entry_load(input.c_str(), &e));
    char* text = nullptr;
    ok(bhc_entry_export(e, &text));
    run.digest = fnv1a(text);
    bhc_string_free(text);
    run.info.emplace_back("entry", bhc_entry_name(e));
    if (bhc_entry_has_hopf(e)) {
      run.info.emplace_back("field", bhc_entry_field(e));
      run.info.emplace_back("category", bhc_entry_category(e));
      run.info.emplace_back("dim", std::to_string(bhc_entry_dim(e)));
    }
  }
  ~Entry() { bhc_entry_free(e); }
  Entry(const Entry&) = delete;
  Entry& operator=(const Entry&) = delete;
};

struct Report {
  bhc_report* r = nullptr;
  ~Report() { bhc_report_free(r); }
};

struct Module {
  bhc_cocyclic* c = nullptr;
  ~Module() { bhc_cocyclic_free(c); }
};

void add_report(Run& run, const bhc_report* r, const std::string& section) {
  for (std::size_t i = 0; i < bhc_report_size(r); ++i) {
    const char *name, *witness, *detail;
    int passed, required;
    ok(bhc_report_entry(r, i, &name, &passed, &required, &witness, &detail));
    run.checks.push_back({section, name, witness, detail, passed != 0, required != 0});
    if (required && !passed) run.status = kFail;
  }
}

std::size_t pick_pair(const Entry& e, const std::string& pair) {
  std::size_t i = 0;
  if (!pair.empty()) ok(bhc_entry_find_pair(e.e, pair.c_str(), &i));
  if (bhc_entry_pair_count(e.e)) return i;
  throw Failure{BHC_E_INVALID_ARGUMENT, std::string(bhc_entry_name(e.e)) + " has no modular pair"};
}

// printed before any cochain space above 1024 dimensions is built
void memory_estimate(std::size_t dim, unsigned top) {
  std::size_t d = 1;
  for (unsigned n = 1; n <= top; ++n) {
    d *= dim;
    if (d > 1024) {
      const double mib = static_cast<double>(d) * static_cast<double>(d) * 48.0 / (1024.0 * 1024.0);
      std::fprintf(stderr, "bhc: C^%u has dimension %zu; a dense operator on it would need about %.0f MiB\n", n, d, mib);
    }
  }
}

std::vector<std::size_t> dims_of(std::size_t* a, unsigned n) { return {a, a + n + 1}; }

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

struct Options {
  std::string format = "text";
  unsigned cap = 0;
  std::string pair;
  unsigned max_degree = 3;
  bool verify = false, tau_power = false, restrict_ = false;
  unsigned truncation = 0;
};

void cmd_check(Run& run, const Options& o, const std::string& kind) {
  static const std::map<std::string, bhc_check_kind> kinds = {{"hopf", BHC_CHECK_HOPF},
                                                              {"pair", BHC_CHECK_PAIR},
                                                              {"bmpi", BHC_CHECK_BMPI},
                                                              {"sayd", BHC_CHECK_SAYD},
                                                              {"category", BHC_CHECK_CATEGORY}};
  (void)o;
  Entry e(run.input, run);
  Report r;
  ok(bhc_check(e.e, kinds.at(kind), &r.r));
  add_report(run, r.r, bhc_report_title(r.r));
}

void cmd_cocyclic(Run& run, const Options& o, const std::string& builder) {
  static const std::map<std::string, bhc_builder> builders = {
      {"cm", BHC_BUILD_CM}, {"cm-super", BHC_BUILD_CM_SUPER}, {"triple", BHC_BUILD_TRIPLE}};
  Entry e(run.input, run);
  const std::size_t pair = pick_pair(e, o.pair);
  run.info.emplace_back("pair", bhc_entry_pair_name(e.e, pair));
  if (o.max_degree <= (o.cap ? o.cap : bhc_default_cap())) memory_estimate(bhc_entry_dim(e.e), o.max_degree);
  Module m;
  ok(bhc_cocyclic_build(e.e, builders.at(builder), pair, o.max_degree, o.cap, &m.c));
  Table dims{"dim C^n", {}};
  for (unsigned n = 0; n <= bhc_cocyclic_max_degree(m.c); ++n) dims.values.push_back(bhc_cocyclic_dim(m.c, n));
  run.tables.push_back(dims);
  if (o.verify) {
    Report r;
    ok(bhc_cocyclic_verify(m.c, &r.r));
    add_report(run, r.r, "identities");
  }
  if (o.tau_power) {
    for (unsigned n = 1; n <= bhc_cocyclic_max_degree(m.c); ++n) {
      int equal = 0, id = 0;
      ok(bhc_cocyclic_tau_power(m.c, n, &equal, &id));
      const std::string deg = std::to_string(n);
      run.checks.push_back({"τ-power", "τ_" + deg + "^" + std::to_string(n + 1) + " = (ψ_{H^" + std::to_string(n - 1) +
                                           ",H})^" + deg,
                            "", "", equal != 0, false});
      run.checks.push_back({"τ-power", "τ_" + deg + "^" + std::to_string(n + 1) + " = id", "", "", id != 0, false});
    }
  }
  if (o.restrict_) {
    Module r;
    ok(bhc_cocyclic_restrict(m.c, &r.c));
    Table t{"dim ker(1-τ^{n+1})", {}};
    for (unsigned n = 0; n <= bhc_cocyclic_max_degree(r.c); ++n) t.values.push_back(bhc_cocyclic_dim(r.c, n));
    run.tables.push_back(t);
  }
}

void cmd_cohomology(Run& run, const Options& o, const std::string& theory) {
  Entry e(run.input, run);
  const unsigned n = o.max_degree;
  std::vector<std::size_t> a(n + 1), b(n + 1), c(n + 1);
  if (theory == "decomposition") {
    int agree = 0;
    if (n <= (o.cap ? o.cap : bhc_default_cap())) memory_estimate(bhc_entry_dim(e.e), n + 1);
    ok(bhc_decomposition(e.e, n, o.cap, a.data(), b.data(), c.data(), &agree));
    run.tables.push_back({"HC^n", dims_of(a.data(), n)});
    run.tables.push_back({"HH^n", dims_of(b.data(), n)});
    run.tables.push_back({"Σ_{i≤n, i≡n} HH^i", dims_of(c.data(), n)});
    std::string eq;
    for (unsigned k = 0; k <= n; ++k) {
      eq += (k ? ", " : "") + std::to_string(a[k]) + "=" + std::to_string(c[k]);
      run.checks.push_back({"decomposition", "HC^" + std::to_string(k) + " = Σ HH^i", "", "", a[k] == c[k], true});
    }
    run.lines.push_back("HC^n = Σ HH^i: " + eq);
    if (!agree) run.status = kFail;
    return;
  }
  static const std::map<std::string, std::pair<bhc_theory, const char*>> theories = {
      {"hochschild", {BHC_HOCHSCHILD, "HH^n"}}, {"cyclic", {BHC_CYCLIC, "HC^n"}}, {"cotor", {BHC_COTOR, "Cotor^n"}}};
  const auto& [t, label] = theories.at(theory);
  const std::size_t pair = pick_pair(e, o.pair);
  run.info.emplace_back("pair", bhc_entry_pair_name(e.e, pair));
  if (n <= (o.cap ? o.cap : bhc_default_cap())) memory_estimate(bhc_entry_dim(e.e) - (t == BHC_COTOR), n + 1);  // the reduced cobar complex lives on ker ε
  ok(bhc_cohomology(e.e, t, pair, n, o.cap, a.data()));
  run.tables.push_back({label, dims_of(a.data(), n)});
}

void cmd_lie(Run& run, const Options& o, const std::string& action) {
  Entry e(run.input, run);
  const unsigned n = o.max_degree;
  std::vector<std::size_t> a(n + 1), b(n + 1), c(n + 1);
  if (action == "homology") {
    ok(bhc_lie_homology(e.e, n, o.cap, a.data()));
    run.tables.push_back({"H_n(g; C_δ)", dims_of(a.data(), n)});
  } else if (action == "ba-check") {
    Report r;
    ok(bhc_lie_ba_check(e.e, n, o.truncation, o.cap, &r.r));
    add_report(run, r.r, bhc_report_title(r.r));
    for (std::size_t i = 0; i < bhc_report_note_count(r.r); ++i) {
      const char *k, *v;
      ok(bhc_report_note(r.r, i, &k, &v));
      run.info.emplace_back(k, v);
    }
  } else {
    int agree = 0;
    ok(bhc_lie_compare(e.e, n, o.cap, a.data(), b.data(), c.data(), &agree));
    run.tables.push_back({"HC^n(U(g), (δ,1))", dims_of(a.data(), n)});
    run.tables.push_back({"H_n(g; C_δ)", dims_of(b.data(), n)});
    run.tables.push_back({"Σ_{i≤n, i≡n} H_i", dims_of(c.data(), n)});
    run.lines.push_back("HC: " + join(a, ",") + " vs partial sums: " + join(c, ","));
    run.checks.push_back({"compare", "HC^n = Σ H_i for n ≤ " + std::to_string(n), "", "", agree != 0, true});
    if (!agree) run.status = kFail;
  }
}

void print_text(const Run& run) {
  std::ostringstream out;
  std::string cmd;
  for (const auto& a : run.command) cmd += (cmd.empty() ? "" : " ") + a;
  out << "$ " << cmd << "\n";
  if (!run.digest.empty()) out << "input: " << run.input << " (" << run.digest << ")\n";
  for (const auto& [k, v] : run.info) out << k << ": " << v << "\n";
  std::string section;
  std::size_t req = 0, req_ok = 0;
  for (const auto& c : run.checks) {
    if (c.section != section) out << "-- " << (section = c.section) << "\n";
    out << (c.passed ? "[pass] " : c.required ? "[FAIL] " : "[info] ") << c.name;
    if (!c.passed && !c.witness.empty()) out << "  witness " << c.witness;
    if (!c.passed && !c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    if (c.required) ++req, req_ok += c.passed;
  }
  if (!run.tables.empty()) {
    std::size_t width = 6;
    for (const auto& t : run.tables) width = std::max(width, t.name.size());
    std::size_t cols = 0;
    for (const auto& t : run.tables) cols = std::max(cols, t.values.size());
    auto pad = [&](const std::string& s) {
      // labels contain multi-byte characters; pad by code points
      std::size_t cp = 0;
      for (unsigned char ch : s) cp += (ch & 0xC0) != 0x80;
      return s + std::string(width + 2 - std::min(width + 1, cp), ' ');
    };
    out << pad("degree");
    for (std::size_t n = 0; n < cols; ++n) out << " " << std::setw(5) << n;
    out << "\n";
    for (const auto& t : run.tables) {
      out << pad(t.name);
      for (auto v : t.values) out << " " << std::setw(5) << v;
      out << "\n";
    }
  }
  for (const auto& l : run.lines) out << l << "\n";
  if (!run.checks.empty()) out << "summary: " << req_ok << "/" << req << " required checks pass\n";
  if (!run.error.empty()) out << "error (" << run.error_code << "): " << run.error << "\n";
  out << "status: " << run.status << "\n";
  std::cout << out.str();
  std::fprintf(stderr, "time: %.1f ms\n", run.ms);
}

void print_structured(const Run& run) {
  ordered_json j;
  j["command"] = run.command;
  j["input"] = run.input;
  j["digest"] = run.digest;
  ordered_json info = ordered_json::object();
  for (const auto& [k, v] : run.info) info[k] = v;
  j["info"] = info;
  ordered_json checks = ordered_json::array();
  for (const auto& c : run.checks)
    checks.push_back({{"section", c.section},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"required", c.required},
                      {"witness", c.witness},
                      {"detail", c.detail}});
  j["checks"] = checks;
  ordered_json tables = ordered_json::object();
  for (const auto& t : run.tables) tables[t.name] = t.values;
  j["tables"] = tables;
  if (!run.error.empty()) j["error"] = {{"code", run.error_code}, {"message", run.error}};
  j["exit_status"] = run.status;
  j["wall_time_ms"] = run.ms;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and cyclic cohomology for braided Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or structured")
      ->envname("BHC_FORMAT")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cap", o.cap, "degree cap (default 4)")->envname("BHC_CAP");
  app.add_option("--pair", o.pair, "modular pair by name or index (default: the first)")->envname("BHC_PAIR");

  std::string what, input;
  auto positional = [&](CLI::App* sub, const std::vector<std::string>& choices, const char* label) {
    sub->add_option(label, what)->required()->check(CLI::IsMember(choices));
    sub->add_option("input", input, "catalog name or interchange file")->required();
  };
  auto degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "top degree (default 3)")->envname("BHC_MAX_DEGREE");
  };

  CLI::App* check = app.add_subcommand("check", "verify a presentation");
  positional(check, {"hopf", "pair", "bmpi", "sayd", "category"}, "kind");
  CLI::App* cocyclic = app.add_subcommand("cocyclic", "build a para-cocyclic module");
  positional(cocyclic, {"cm", "cm-super", "triple"}, "builder");
  degree(cocyclic);
  cocyclic->add_flag("--verify", o.verify, "check every para-cocyclic identity")->envname("BHC_VERIFY");
  cocyclic->add_flag("--tau-power", o.tau_power, "compare τ_n^{n+1} with the braiding power")->envname("BHC_TAU_POWER");
  cocyclic->add_flag("--restrict", o.restrict_, "restrict to ker(1-τ^{n+1})")->envname("BHC_RESTRICT");
  CLI::App* cohomology = app.add_subcommand("cohomology", "dimension tables");
  positional(cohomology, {"hochschild", "cyclic", "cotor", "decomposition"}, "theory");
  degree(cohomology);
  CLI::App* lie = app.add_subcommand("lie", "super Lie algebra homology and comparisons");
  positional(lie, {"homology", "ba-check", "compare"}, "action");
  degree(lie);
  lie->add_option("--truncation", o.truncation, "PBW truncation length for ba-check (default max(2, N))")
      ->envname("BHC_TRUNCATION");
  CLI::App* list = app.add_subcommand("list", "list the built-in examples");
  CLI::App* exporter = app.add_subcommand("export", "print an entry in the interchange format");
  exporter->add_option("input", input, "catalog name or interchange file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  if (list->parsed()) {
    for (std::size_t i = 0; const char* n = bhc_example_name(i); ++i) std::cout << n << "\n";
    return kPass;
  }
  if (exporter->parsed()) {
    bhc_entry* e = nullptr;
    char* text = nullptr;
    if (bhc_entry_load(input.c_str(), &e) != BHC_OK || bhc_entry_export(e, &text) != BHC_OK) {
      std::fprintf(stderr, "bhc: %s\n", bhc_last_error());
      bhc_entry_free(e);
      return kInput;
    }
    std::cout << text << "\n";
    bhc_string_free(text);
    bhc_entry_free(e);
    return kPass;
  }

  Run run;
  run.input = input;
  CLI::App* sub = app.get_subcommands().front();
  run.command = {"bhc", sub->get_name(), what, input};
  if (sub != check) run.command.push_back("--max-degree=" + std::to_string(o.max_degree));
  if (o.verify) run.command.push_back("--verify");
  if (o.tau_power) run.command.push_back("--tau-power");
  if (o.restrict_) run.command.push_back("--restrict");
  if (o.cap) run.command.push_back("--cap=" + std::to_string(o.cap));
  if (!o.pair.empty()) run.command.push_back("--pair=" + o.pair);
  if (o.truncation) run.command.push_back("--truncation=" + std::to_string(o.truncation));

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (sub == check) cmd_check(run, o, what);
    else if (sub == cocyclic) cmd_cocyclic(run, o, what);
    else if (sub == cohomology) cmd_cohomology(run, o, what);
    else cmd_lie(run, o, what);
  } catch (const Failure& f) {
    run.status = exit_for(f.code);
    run.error_code = bhc_status_name(f.code);
    run.error = f.message;
    std::fprintf(stderr, "bhc: %s\n", f.message.c_str());
  }
  run.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (o.format == "structured") print_structured(run);
  else print_text(run);
  return run.status;
}
