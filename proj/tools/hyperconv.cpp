// hyperconv: build hypergroups from JSON specs, check their axioms,
// convolve point masses and run bounded Ramsey-type experiments.
//
// Exit codes: 0 success or witness, 1 failed check or reproduction
// mismatch, 2 invalid input, 3 bounded exhaustion.

#include "hyperconv/errors.hpp"
#include "hyperconv/reproduce.hpp"
#include "hyperconv/spec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace hyperconv;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;
constexpr int kExhausted = 3;

struct Options {
  std::string spec_path;
  std::string inline_spec;
  std::string out_path;
  std::string format = "json";
  std::optional<int> window;
  std::optional<int> depth;
  std::uint64_t seed = 0;
  std::string m, n, sequence;
  std::string reproduction;
};

json load_spec(const Options& o) {
  if (o.spec_path.empty() == o.inline_spec.empty()) throw SpecError("give exactly one of --spec or --inline");
  std::string text = o.inline_spec;
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw SpecError("cannot read " + o.spec_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path);
  if (!out) throw SpecError("cannot write " + o.out_path);
  out << text;
}

json envelope(const std::string& command, const Options& o, const json& spec) {
  return {{"command", command}, {"seed", o.seed}, {"spec", spec}, {"spec_hash", spec_hash(spec)}};
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw SpecError("format '" + o.format + "' is not available for this command");
}

std::string axioms_markdown(const AxiomReport& r) {
  std::ostringstream out;
  out << "| axiom | cases | result | counterexample |\n|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    out << "| " << c.axiom << " | " << c.cases << " | " << (c.passed ? "pass" : "FAIL") << " | ";
    if (c.counterexample) out << to_string(c.counterexample->elements) << " " << c.counterexample->detail;
    out << " |\n";
  }
  return out.str();
}

AxiomReport full_check(const HypergroupDescriptor& k, const Window& w) {
  AxiomReport report = check_axioms(k, w);
  if (k.claims(Claim::Commutative) || k.claims(Claim::Hermitian)) report.merge(check_commutativity(k, w));
  return report;
}

int cmd_construct(const Options& o) {
  require_format(o, {"json", "md"});
  const json spec = load_spec(o);
  const HypergroupDescriptor k = descriptor_from_spec(spec);
  const int radius = o.window.value_or(8);
  const AxiomReport validation = full_check(k, Window(k.window(radius)));
  json report = envelope("construct", o, spec);
  report["descriptor"] = descriptor_to_json(k, std::min(radius, 6));
  report["validation"] = to_json(validation);
  if (o.format == "md") {
    std::ostringstream out;
    out << "## " << k.name() << "\n\n- carrier: " << k.carrier() << "\n- identity: " << to_string(k.identity())
        << "\n- involution: " << k.involution_kind() << "\n- claims:";
    for (Claim c : k.claims()) out << " " << to_string(c);
    out << "\n- spec hash: " << spec_hash(spec) << "\n- seed: " << o.seed << "\n\n" << axioms_markdown(validation);
    emit(o, out.str());
  } else {
    emit(o, report.dump(2) + "\n");
  }
  if (!validation.passed()) {
    for (const auto& c : validation.checks)
      if (!c.passed) std::cerr << "validation failed: " << c.axiom << "\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "md"});
  const json spec = load_spec(o);
  const HypergroupDescriptor k = descriptor_from_spec(spec);
  const Window w(k.window(o.window.value_or(10)));
  const AxiomReport report = full_check(k, w);
  if (o.format == "md") {
    emit(o, "## verify " + k.name() + " on " + w.describe() + "\n\n- seed: " + std::to_string(o.seed) + "\n\n" +
                axioms_markdown(report));
  } else {
    json out = envelope("verify", o, spec);
    out["report"] = to_json(report);
    emit(o, out.dump(2) + "\n");
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_convolve(const Options& o) {
  require_format(o, {"json", "md", "csv"});
  const json spec = load_spec(o);
  const HypergroupDescriptor k = descriptor_from_spec(spec);
  Elements xs;
  try {
    if (!o.sequence.empty()) {
      for (const auto& j : json::parse(o.sequence)) xs.push_back(element_from_json(j));
    } else {
      if (o.m.empty() || o.n.empty()) throw SpecError("give --m and --n, or --sequence");
      xs = {element_from_json(json::parse(o.m)), element_from_json(json::parse(o.n))};
    }
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("element is not valid JSON: ") + e.what());
  }
  const FiniteMeasure mu = convolve_sequence(k, xs);
  if (o.format == "csv") {
    std::string out = "elem;num;den\n";
    for (const auto& [x, w] : mu.weights())
      out += to_string(x) + ";" + integer_string(w.get_num()) + ";" + integer_string(w.get_den()) + "\n";
    emit(o, out);
  } else if (o.format == "md") {
    emit(o, "## " + k.name() + "\n\n- factors: " + to_string(xs) + "\n- seed: " + std::to_string(o.seed) +
                "\n- product: " + to_string(mu) + "\n");
  } else {
    json out = envelope("convolve", o, spec);
    json factors = json::array();
    for (const auto& x : xs) factors.push_back(to_json(x));
    out["factors"] = factors;
    out["product"] = to_json(mu);
    emit(o, out.dump(2) + "\n");
  }
  return kOk;
}

int cmd_experiment(const Options& o) {
  const json spec = load_spec(o);
  ExperimentSpec exp = experiment_from_spec(spec);
  if (o.window) exp.window = *o.window;
  if (o.depth) exp.depth = *o.depth;
  const ExperimentReport report = run_experiment(exp);
  if (o.format == "csv") {
    emit(o, to_csv(report));
  } else if (o.format == "md") {
    emit(o, to_markdown(report) + "\n- seed: " + std::to_string(o.seed) + "\n- spec hash: " + spec_hash(spec) + "\n");
  } else if (o.format == "json") {
    json out = envelope("experiment", o, spec);
    out["report"] = to_json(report);
    emit(o, out.dump(2) + "\n");
  } else {
    throw SpecError("unknown format '" + o.format + "'");
  }
  return report.found() ? kOk : kExhausted;
}

int cmd_reproduce(const Options& o) {
  require_format(o, {"json", "md"});
  const Reproduction r = reproduce(o.reproduction, o.seed);
  if (o.format == "md") {
    emit(o, to_markdown(r));
  } else {
    const json name = o.reproduction;
    json out = envelope("reproduce", o, name);
    out["name"] = r.name;
    out["passed"] = r.passed;
    out["summary"] = r.summary;
    out["details"] = r.details;
    emit(o, out.dump(2) + "\n");
  }
  return r.passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discrete hypergroup convolutions and Ramsey-type experiments"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) {
      sub->add_option("--spec", o.spec_path, "construction or experiment spec file (JSON)");
      sub->add_option("--inline", o.inline_spec, "spec given inline as JSON");
    }
    sub->add_option("--out", o.out_path, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json | md | csv")->check(CLI::IsMember({"json", "md", "csv"}));
    sub->add_option("--seed", o.seed, "seed, recorded in every report");
  };

  auto* construct = app.add_subcommand("construct", "build a descriptor and validate it on a window");
  add_common(construct, true);
  construct->add_option("--window", o.window, "validation window radius (default 8)");

  auto* verify = app.add_subcommand("verify", "check the hypergroup axioms on a window");
  add_common(verify, true);
  verify->add_option("--window", o.window, "window radius (default 10)");

  auto* convolve = app.add_subcommand("convolve", "convolve point masses");
  add_common(convolve, true);
  convolve->add_option("--m", o.m, "first element (JSON)");
  convolve->add_option("--n", o.n, "second element (JSON)");
  convolve->add_option("--sequence", o.sequence, "JSON list of elements, folded left to right");

  auto* experiment = app.add_subcommand("experiment", "bounded search for a Ramsey-type witness");
  add_common(experiment, true);
  experiment->add_option("--window", o.window, "override the spec's window");
  experiment->add_option("--depth", o.depth, "override the spec's depth");

  auto* repro = app.add_subcommand("reproduce", "run a named exact computation");
  add_common(repro, false);
  repro->add_option("name", o.reproduction, "reproduction name")
      ->required()
      ->check(CLI::IsMember(reproduction_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*convolve) return cmd_convolve(o);
    if (*experiment) return cmd_experiment(o);
    if (*repro) return cmd_reproduce(o);
  } catch (const hyperconv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
