#include "report_json.hpp"

#include <algorithm>
#include <cstdio>

namespace bicyclic::cli {

namespace {

template <class F>
void for_each_bound(const SuiteBounds& b, F&& f) {
  if (b.bound) f("bound", *b.bound);
  if (b.kmax) f("kmax", *b.kmax);
  if (b.search_kmax) f("search_kmax", *b.search_kmax);
  if (b.symbolic_kmax) f("symbolic_kmax", *b.symbolic_kmax);
  if (b.t_max) f("t_max", *b.t_max);
  if (b.s_max) f("s_max", *b.s_max);
}

bool all_pass(std::span<const VerifyReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
}

}  // namespace

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json bounds = nlohmann::json::object();
  for_each_bound(r.bounds, [&](const char* key, Int v) { bounds[key] = v; });
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures) {
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  return {
      {"suite", r.suite},
      {"bounds", bounds},
      {"cases", r.cases_run},
      {"failure_count", r.failure_count},
      {"failures", failures},
      {"witnesses", r.witnesses},
      {"elapsed_ms", r.elapsed_ms},
      {"pass", r.pass()},
  };
}

nlohmann::json reports_to_json(std::span<const VerifyReport> reports) {
  nlohmann::json list = nlohmann::json::array();
  for (const VerifyReport& r : reports) list.push_back(report_to_json(r));
  return {{"reports", list}, {"pass", all_pass(reports)}};
}

std::string report_to_text(const VerifyReport& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.1f", r.elapsed_ms);
  std::string out = r.suite + ": " + (r.pass() ? "PASS" : "FAIL") +
                    " cases=" + std::to_string(r.cases_run) +
                    " failures=" + std::to_string(r.failure_count);
  for_each_bound(r.bounds, [&](const char* key, Int v) {
    out += " " + std::string(key) + "=" + std::to_string(v);
  });
  out += " elapsed_ms=" + std::string(elapsed) + "\n";
  for (const Failure& f : r.failures) {
    out += "  failure: " + f.inputs + ": expected " + f.expected + ", got " + f.got + "\n";
  }
  for (const std::string& w : r.witnesses) out += "  witness: " + w + "\n";
  return out;
}

std::string reports_to_text(std::span<const VerifyReport> reports) {
  std::string out;
  for (const VerifyReport& r : reports) out += report_to_text(r);
  out += std::string("overall: ") + (all_pass(reports) ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace bicyclic::cli
