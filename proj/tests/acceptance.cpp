// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runs the verification suites at the acceptance bounds
// plus a few direct checks the suites do not phrase literally.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bicyclic/endomorphism.hpp"
#include "bicyclic/verify.hpp"
#include "cli.hpp"
#include "support/schema_check.hpp"

using namespace bicyclic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

void require_suite(Outcome& o, std::string_view suite, const BoundsOverride& b = {},
                   double budget_ms = 0) {
  const VerifyReport r = run_suite(suite, b);
  std::ostringstream s;
  s << suite << " cases=" << r.cases_run << " failures=" << r.failure_count
    << " ms=" << static_cast<long long>(r.elapsed_ms);
  if (!r.pass()) {
    o.fail(s.str() + (r.failures.empty() ? "" : " first: " + r.failures.front().inputs));
    return;
  }
  if (budget_ms > 0 && r.elapsed_ms > budget_ms) {
    o.fail(s.str() + " over time budget");
    return;
  }
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += s.str();
}

Outcome semigroup_axioms() {
  Outcome o;
  require_suite(o, "semigroup_axioms", {.bound = 8}, 60'000);
  return o;
}

Outcome inverse_axioms() {
  Outcome o;
  require_suite(o, "inverse_axioms", {.bound = 8});
  return o;
}

Outcome natural_order() {
  Outcome o;
  require_suite(o, "order", {.bound = 8});
  return o;
}

// Every legal endo is an injective homomorphism; every form with
// p in {k, k+1, k+2}, k <= 4, must yield a homomorphism counterexample.
Outcome endomorphisms() {
  Outcome o;
  require_suite(o, "endo_homomorphism", {.bound = 8, .kmax = 5});
  require_suite(o, "endo_injectivity", {.bound = 8, .kmax = 5});
  for (EndoKind kind : {EndoKind::Alpha, EndoKind::Beta}) {
    for (Int k = 1; k <= 4; ++k) {
      for (Int p = k; p <= k + 2; ++p) {
        const EndoForm f{kind, k, p};
        if (homomorphism_counterexample(f, 6)) continue;
        std::string why = to_string(f) + " has no homomorphism counterexample at N=6";
        if (const auto c = injectivity_collision(f, 6)) {
          why += " (injectivity fails instead: " + to_string(c->first) + " and " +
                 to_string(c->second) + " collide)";
        }
        o.fail(why);
      }
    }
  }
  return o;
}

Outcome composition() {
  Outcome o;
  require_suite(o, "composition_table", {.bound = 20, .kmax = 5});
  return o;
}

Outcome monoid_structure() {
  Outcome o;
  require_suite(o, "idempotents", {.kmax = 20});
  require_suite(o, "cancellative", {.kmax = 5});
  require_suite(o, "ideal", {.kmax = 5});
  return o;
}

Outcome green() {
  Outcome o;
  require_suite(o, "green_agreement", {.kmax = 6}, 120'000);
  return o;
}

Outcome growth() {
  Outcome o;
  require_suite(o, "growth_inequalities", {.kmax = 6, .t_max = 50});
  return o;
}

struct CliCase {
  std::vector<std::string> args;
  int code;
  std::string out;  // exact stdout; empty means "not compared"
  std::string contains = {};
  bool on_stderr = false;
};

Outcome cli_contract() {
  Outcome o;
  const std::vector<CliCase> cases{
      {{"mul", "(1,2,0)", "(1,3,1)"}, 0, "(1,4,0)\n"},
      {{"mul", "(0,0,0)", "(2,3,1)"}, 0, "(2,3,1)\n"},
      {{"mul", "(1,2,0)", "(1,3,7)"}, 2, ""},
      {{"mul", "(0,0,0)", "(0,0,0)", "--family", "0,2"}, 3, ""},
      {{"endo", "compose", "a:2,1", "a:3,2"}, 0, "a:6,5\n"},
      {{"endo", "apply", "b:3,2", "(1,0,1)"}, 0, "(5,2,0)\n"},
      {{"endo", "classify", "--k", "2", "--level", "1", "--p", "2"}, 4, "", "p exceeds k-1", true},
      {{"green", "-r", "J", "a:2,1", "b:2,1"}, 0, "related: false\n"},
      {{"green", "-r", "R", "a:2,1", "a:2,1"}, 0, "related: true\n"},
      {{"green", "-r", "L", "b:4,1", "b:4,3", "--mode", "search", "--kmax", "6"}, 0,
       "related: false (bound 6)\n"},
      {{"verify", "--suite", "all"}, 0, "", "overall: PASS"},
      {{"verify", "--suite", "green_agreement", "--kmax", "6"}, 0, "", "green_agreement: PASS"},
      {{"verify", "--suite", "semigroup_axioms", "--bound", "0"}, 0, "", "associativity triples=8"},
      {{"verify", "--suite", "no_such_suite"}, 2, ""},
      {{"export-cayley", "--bound", "0", "--format", "csv"}, 0, "source,generator,target\n"},
      {{"export-cayley", "-o", "/nonexistent-dir/graph.dot"}, 5, ""},
  };
  for (const CliCase& c : cases) {
    std::ostringstream out, err;
    const int code = cli::run(c.args, out, err);
    std::string shown;
    for (const auto& a : c.args) shown += (shown.empty() ? "" : " ") + a;
    if (code != c.code) o.fail("`" + shown + "` exit " + std::to_string(code));
    if (!c.out.empty() && out.str() != c.out) o.fail("`" + shown + "` printed " + out.str());
    const std::string& stream = c.on_stderr ? err.str() : out.str();
    if (!c.contains.empty() && stream.find(c.contains) == std::string::npos) {
      o.fail("`" + shown + "` lacks \"" + c.contains + "\"");
    }
  }

  // Cayley fragments: 18 nodes at bound 2; 2 nodes and no edges at bound 0.
  std::ostringstream dot2, dot0, sink;
  cli::run({"export-cayley", "--bound", "2", "--generators", "(0,1,0)"}, dot2, sink);
  cli::run({"export-cayley", "--bound", "0"}, dot0, sink);
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
  };
  if (count(dot2.str(), "\";\n") != 18) o.fail("bound-2 Cayley graph does not have 18 nodes");
  if (count(dot0.str(), "\";\n") != 2 || count(dot0.str(), "->") != 0) {
    o.fail("bound-0 Cayley graph is not 2 nodes, 0 edges");
  }

  // JSON reports validate and agree with the text verdict.
  std::ifstream schema_in(BICYCLIC_REPORT_SCHEMA);
  const auto schema = nlohmann::json::parse(schema_in);
  for (const char* suite : {"all", "classification_negative"}) {
    std::vector<std::string> args{"verify", "--suite", suite, "--format", "json"};
    if (std::string(suite) != "all") args.insert(args.end(), {"--bound", "0"});
    std::ostringstream json_out, text_out, err;
    const int json_code = cli::run(args, json_out, err);
    args.erase(args.begin() + 3, args.begin() + 5);
    const int text_code = cli::run(args, text_out, err);
    const auto doc = nlohmann::json::parse(json_out.str());
    for (const auto& e : schema_check::validate(schema, doc)) o.fail(std::string(suite) + " schema: " + e);
    if (doc["pass"].get<bool>() != (json_code == 0) || json_code != text_code) {
      o.fail(std::string(suite) + ": JSON and text verdicts disagree");
    }
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " invocations, schema ok";
  return o;
}

}  // namespace

int main() {
  assert_registry_complete();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"semigroup axioms (N=8, < 60 s)", semigroup_axioms},
      {"inverse-semigroup axioms (N=8)", inverse_axioms},
      {"natural partial order (N=8)", natural_order},
      {"endomorphisms and out-of-range counterexamples", endomorphisms},
      {"composition table", composition},
      {"monoid structure", monoid_structure},
      {"Green's relations agreement (< 120 s)", green},
      {"growth inequalities (k <= 6, t <= 50)", growth},
      {"CLI contract and report schema", cli_contract},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "[" << (o.pass ? "PASS" : "FAIL") << "] criterion " << n << ": " << name << " -- "
              << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "acceptance: PASS" : "acceptance: FAIL") << " (" << n - failed << "/"
            << n << ")" << std::endl;
  return failed == 0 ? 0 : 1;
}
