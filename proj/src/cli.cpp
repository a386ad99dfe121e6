#include "smcnets/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "smcnets/correctness.hpp"
#include "smcnets/equivalence.hpp"
#include "smcnets/errors.hpp"
#include "smcnets/net_io.hpp"
#include "smcnets/theory.hpp"
#include "smcnets/translate.hpp"

#ifndef SMCNETS_THEORY_DIR
#define SMCNETS_THEORY_DIR "theories"
#endif

namespace smcnets::cli {

namespace fs = std::filesystem;

namespace {

// Missing input files are usage errors, not data errors.
struct MissingFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string resolve_theory(const std::string& name) {
  if (fs::is_regular_file(name)) return name;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("SMCNETS_THEORY_PATH")) dirs.emplace_back(env);
  dirs.emplace_back(SMCNETS_THEORY_DIR);
  for (const fs::path& dir : dirs) {
    fs::path p = dir / name;
    if (fs::is_regular_file(p)) return p.string();
  }
  throw MissingFile("no such theory file: " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe(const SwitchVertex& v) {
  return to_string(PortRef{v.region, v.path});
}

void report_failure(const SwitchGraph& g, std::uint64_t total, bool explain, std::ostream& out) {
  out << "INCORRECT: switching " << g.index() << " of " << total;
  std::optional<std::vector<std::size_t>> cycle = g.find_cycle();
  if (cycle) {
    out << " has a cycle\n  cycle:";
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      out << (i ? " - " : " ") << describe(g.vertices()[(*cycle)[i]]);
    }
    out << "\n";
  } else {
    out << " is disconnected\n";
  }
  if (explain) out << switching_to_dot(g, cycle ? &*cycle : nullptr);
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Proof nets for free symmetric monoidal closed categories", "smcnets"};
  app.require_subcommand(1);

  std::string theory_file, term1, term2, net_file, theory_opt;
  bool as_json = false, as_dot = false, explain = false, count_only = false;
  std::size_t depth = 3;

  auto* check = app.add_subcommand("check", "Print the arity of a term");
  check->add_option("theory", theory_file)->required();
  check->add_option("term", term1)->required();

  auto* net = app.add_subcommand("net", "Translate a term to a net");
  net->add_option("theory", theory_file)->required();
  net->add_option("term", term1)->required();
  auto* json_flag = net->add_flag("--json", as_json, "Canonical JSON (default)");
  net->add_flag("--dot", as_dot, "Graphviz DOT")->excludes(json_flag);

  auto* render = app.add_subcommand("render", "Translate a term and emit DOT");
  render->add_option("theory", theory_file)->required();
  render->add_option("term", term1)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose the nets of two terms, first then second");
  compose_cmd->add_option("theory", theory_file)->required();
  compose_cmd->add_option("first", term1)->required();
  compose_cmd->add_option("second", term2)->required();

  auto* correct = app.add_subcommand("correct", "Check a JSON net against the switching criterion");
  correct->add_option("netfile", net_file)->required();
  correct->add_option("--theory", theory_opt, "Theory typing the support");
  correct->add_flag("--explain", explain, "Print the first failing switching as DOT");

  auto* equal = app.add_subcommand("equal", "Search for an equality modulo the theory");
  equal->add_option("theory", theory_file)->required();
  equal->add_option("lhs", term1)->required();
  equal->add_option("rhs", term2)->required();
  equal->add_option("--depth", depth, "Total rewrite steps")->capture_default_str();

  auto* switchings = app.add_subcommand("switchings", "List the switchings of a term's net");
  switchings->add_option("theory", theory_file)->required();
  switchings->add_option("term", term1)->required();
  switchings->add_flag("--count", count_only, "Only print how many there are");

  Result r;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    r.status = code == 0 ? kOk : kUsage;
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  try {
    auto load = [&]() { return load_theory(resolve_theory(theory_file)); };
    if (check->parsed()) {
      Theory th = load();
      out << to_string(infer_type(parse_term(term1, th.signature), th.signature)) << "\n";
    } else if (net->parsed() || render->parsed()) {
      Theory th = load();
      Term t = parse_term(term1, th.signature);
      infer_type(t, th.signature);
      Net n = translate(t, th.signature);
      if (as_dot || render->parsed()) {
        out << net_to_dot(n);
      } else {
        out << net_to_json(n) << "\n";
      }
    } else if (compose_cmd->parsed()) {
      Theory th = load();
      Term a = parse_term(term1, th.signature);
      Term b = parse_term(term2, th.signature);
      Arity aa = infer_type(a, th.signature);
      Arity ba = infer_type(b, th.signature);
      if (aa.target != ba.source) {
        throw TypeError("cannot compose: first term has codomain " + to_string(aa.target) +
                        " but second has domain " + to_string(ba.source));
      }
      out << net_to_json(compose(translate(a, th.signature), translate(b, th.signature))) << "\n";
    } else if (correct->parsed()) {
      std::optional<Theory> th;
      if (!theory_opt.empty()) th = load_theory(resolve_theory(theory_opt));
      Net n = net_from_json(read_file(net_file), th ? &th->signature : nullptr);
      try {
        check_sort_bijection(n);
      } catch (const TypeError& e) {
        out << "INCORRECT: " << e.what() << "\n";
        r.status = kFalsified;
      }
      if (r.status == kOk) {
        Switchings all(n);
        std::optional<SwitchGraph> bad = first_failing_switching(n);
        if (bad) {
          report_failure(*bad, all.size(), explain, out);
          r.status = kFalsified;
        } else {
          out << "CORRECT: all " << all.size() << " switchings are trees\n";
        }
      }
    } else if (equal->parsed()) {
      Theory th = load();
      Term a = parse_term(term1, th.signature);
      Term b = parse_term(term2, th.signature);
      SearchResult res = theory_equal_bounded(a, b, th, depth);
      if (res.equal()) {
        out << "EQUAL\n";
        for (const RewriteStep& s : res.trace) out << "  " << to_string(s) << "\n";
      } else if (depth == 0) {
        out << "NOT-EQUAL-FREE\n";
        r.status = kFalsified;
      } else {
        out << "UNKNOWN(" << depth << ")\n";
        r.status = kUnknown;
      }
    } else if (switchings->parsed()) {
      Theory th = load();
      Term t = parse_term(term1, th.signature);
      infer_type(t, th.signature);
      Net n = translate(t, th.signature);
      Switchings all(n);
      if (count_only) {
        out << all.size() << "\n";
      } else {
        for (std::uint64_t k = 0; k < all.size(); ++k) {
          SwitchGraph g = all.at(k);
          out << k << ": " << (g.is_tree() ? "tree" : g.find_cycle() ? "cycle" : "disconnected") << "\n";
        }
      }
    }
  } catch (const MissingFile& e) {
    err << "error: " << e.what() << "\n";
    r.status = kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    r.status = kDataError;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    r.status = kDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    r.status = kDataError;
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace smcnets::cli
