#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bicyclic/green.hpp"
#include "bicyclic/monoid.hpp"
#include "bicyclic/verify.hpp"
#include "cayley.hpp"
#include "report_json.hpp"
#include "syntax.hpp"

namespace bicyclic::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string family = "0,1";

  std::vector<std::string> operands;

  // endo classify
  Int k = 1;
  Int level = 1;
  Int p = 0;

  // green
  std::string relation;
  std::string mode = "symbolic";
  Int green_kmax = 6;

  // verify
  std::string suite = "all";
  std::optional<Int> bound;
  std::optional<Int> kmax;
  std::optional<Int> t_max;
  std::string format;

  // export-cayley
  Int cayley_bound = 2;
  std::vector<std::string> generators;
  std::string output;
};

BicyclicExtension monoid_for(const Options& o) { return BicyclicExtension(parse_family(o.family)); }

void require_canonical(const Options& o, const char* command) {
  if (!parse_family(o.family).is_canonical()) {
    throw FamilyError(std::string(command) +
                      " is only defined for the family {[0),[1)} (--family 0,1)");
  }
}

Elem element_in(const BicyclicExtension& m, const std::string& text) {
  Elem x = parse_elem(text);
  if (!m.contains(x)) {
    throw ParseError("set base " + std::to_string(x.base()) + " of " + to_string(x) +
                     " is not in family " + m.family().to_string());
  }
  return x;
}

int cmd_mul(const Options& o, std::ostream& out) {
  const BicyclicExtension m = monoid_for(o);
  const Elem x = element_in(m, o.operands.at(0));
  const Elem y = element_in(m, o.operands.at(1));
  out << format_elem(m.mul(x, y)) << "\n";
  return kOk;
}

int cmd_endo_apply(const Options& o, std::ostream& out) {
  require_canonical(o, "endo apply");
  const InjEndo e = parse_endo(o.operands.at(0));
  const Elem x = element_in(BicyclicExtension(), o.operands.at(1));
  out << format_elem(apply(e, x)) << "\n";
  return kOk;
}

int cmd_endo_compose(const Options& o, std::ostream& out) {
  require_canonical(o, "endo compose");
  out << format_endo(compose(parse_endo(o.operands.at(0)), parse_endo(o.operands.at(1)))) << "\n";
  return kOk;
}

int cmd_endo_classify(const Options& o, std::ostream& out) {
  require_canonical(o, "endo classify");
  if (o.level != 0 && o.level != 1) throw ParseError("--level must be 0 or 1");
  const GeneratorImages g{o.k, o.level == 1 ? TargetLevel::Level1 : TargetLevel::Level0, o.p};
  out << format_endo(classify_from_images(g)) << "\n";
  return kOk;
}

int cmd_green(const Options& o, std::ostream& out) {
  require_canonical(o, "green");
  const auto rel = parse_green_relation(o.relation);
  if (!rel) throw ParseError("relation must be one of R, L, H, D, J");
  const GreenQuery q{*rel, parse_endo(o.operands.at(0)), parse_endo(o.operands.at(1)), o.green_kmax};
  if (o.mode == "symbolic") {
    out << "related: " << (green_symbolic(q) ? "true" : "false") << "\n";
    return kOk;
  }
  const WitnessSearchResult res = green_bounded_search(q);
  out << "related: " << (res.related ? "true" : "false") << " (bound " << res.exhausted_bound
      << ")\n";
  if (res.related) {
    out << "witnesses:";
    for (const Factor& f : res.witnesses) out << " " << to_string(f);
    out << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string_view> suites;
  if (o.suite == "all") {
    auto names = suite_names();
    suites.assign(names.begin(), names.end());
  } else if (is_known_suite(o.suite)) {
    suites.push_back(o.suite);
  } else {
    throw ParseError("unknown suite: " + o.suite);
  }
  const BoundsOverride overrides{o.bound, o.kmax, o.t_max};
  for (std::string_view s : suites) resolve_bounds(s, overrides);  // fail before running

  std::vector<VerifyReport> reports;
  for (std::string_view s : suites) reports.push_back(run_suite(s, overrides));
  if (o.format == "json") {
    out << reports_to_json(reports).dump(2) << "\n";
  } else {
    out << reports_to_text(reports);
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.pass(); });
  return pass ? kOk : kVerifyFailed;
}

int cmd_export_cayley(const Options& o, std::ostream& out) {
  const BicyclicExtension m = monoid_for(o);
  std::vector<Elem> gens;
  for (const std::string& text : o.generators) {
    for (const Elem& g : parse_elem_list(text)) gens.push_back(element_in(m, to_string(g)));
  }
  const CayleyGraph graph = build_cayley(m, o.cayley_bound, gens);

  std::ostringstream buffer;
  if (o.format == "csv") {
    write_csv(graph, buffer);
  } else {
    write_dot(graph, buffer);
  }
  if (o.output.empty() || o.output == "-") {
    out << buffer.str();
    return kOk;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + o.output + " for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing " + o.output);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetic and exhaustive checks for the bicyclic extension over {[0),[1)}"};
  app.name("bicyclic");
  app.require_subcommand(1);

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Comma-separated inductive-set bases")
        ->default_str("0,1");
  };

  auto* mul = app.add_subcommand("mul", "Multiply two elements (i,j,b)");
  mul->add_option("x", o.operands, "Elements")->expected(2)->required();
  add_family(mul);

  auto* endo = app.add_subcommand("endo", "Injective monoid endomorphisms a:k,p / b:k,p");
  endo->require_subcommand(1);
  add_family(endo);
  auto* endo_apply = endo->add_subcommand("apply", "Apply an endomorphism to an element");
  endo_apply->add_option("args", o.operands, "ENDO ELEMENT")->expected(2)->required();
  auto* endo_compose = endo->add_subcommand("compose", "First endomorphism, then the second");
  endo_compose->add_option("args", o.operands, "ENDO ENDO")->expected(2)->required();
  auto* endo_classify = endo->add_subcommand("classify", "Endomorphism from generator images");
  endo_classify->add_option("--k", o.k, "(1,1,[0)) maps to (k,k,[0))")->required();
  endo_classify->add_option("--level", o.level, "Level of the image of (0,0,[1)): 0 or 1")->required();
  endo_classify->add_option("--p", o.p, "(0,0,[1)) maps to (p,p,[level)))")->required();

  auto* green = app.add_subcommand("green", "Green's relations between two endomorphisms");
  green->add_option("-r,--relation", o.relation, "R, L, H, D or J")->required();
  green->add_option("args", o.operands, "ENDO ENDO")->expected(2)->required();
  green->add_option("--kmax", o.green_kmax, "Bound on witness factors (search mode)");
  green->add_option("--mode", o.mode, "symbolic or search")
      ->check(CLI::IsMember({"symbolic", "search"}));
  add_family(green);

  auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
  verify->add_option("--suite", o.suite, "Suite name or 'all'");
  verify->add_option("--bound", o.bound, "Truncation coordinate bound N");
  verify->add_option("--kmax", o.kmax, "Endomorphism parameter bound");
  verify->add_option("--t-max", o.t_max, "Growth inequality horizon");
  verify->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cayley = app.add_subcommand("export-cayley", "Export a right Cayley graph fragment");
  cayley->add_option("--bound", o.cayley_bound, "Truncation coordinate bound N");
  cayley->add_option("--generators", o.generators, "Generator elements")->expected(0, -1);
  cayley->add_option("--format", o.format, "dot or csv")->check(CLI::IsMember({"dot", "csv"}));
  cayley->add_option("-o,--output", o.output, "Output file (default stdout)");
  add_family(cayley);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (mul->parsed()) return cmd_mul(o, out);
    if (endo_apply->parsed()) return cmd_endo_apply(o, out);
    if (endo_compose->parsed()) return cmd_endo_compose(o, out);
    if (endo_classify->parsed()) return cmd_endo_classify(o, out);
    if (green->parsed()) return cmd_green(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (cayley->parsed()) return cmd_export_cayley(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << "\n";
    return kFamilyError;
  } catch (const ParameterRangeError& e) {
    err << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace bicyclic::cli
