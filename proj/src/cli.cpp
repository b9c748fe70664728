#include "indsub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "indsub/errors.hpp"
#include "indsub/extractors.hpp"
#include "indsub/families.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/solvers.hpp"
#include "indsub/treewidth.hpp"

namespace indsub {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ids(const VertexSet& s) { return ordered_json(s.members()); }

std::string ids_text(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) os << (i ? "," : "") << s.members()[i];
  os << '}';
  return os.str();
}

ParsedGraph load(const std::string& path) { return read_graph(read_file(path)); }

// key=value tokens after `check --claim ID`.
ClaimParams parse_claim_params(const std::vector<std::string>& tokens) {
  ClaimParams p;
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw BadParams("expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq), val = t.substr(eq + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || val.empty()) throw BadParams("value of " + key + " is not an integer");
    p.emplace_back(key, v);
  }
  return p;
}

struct Options {
  std::string format = "text";
  bool stable_timing = false;
};

void emit_solve(const Options& o, std::ostream& out, const InvariantKind& kind, const SolveResult& r) {
  std::int64_t ms = o.stable_timing ? 0 : r.elapsed.count();
  if (o.format == "jsonl") {
    ordered_json j;
    j["invariant"] = kind.name();
    j["value"] = r.value;
    j["optimal"] = r.optimal;
    j["bound"] = to_string(r.bound);
    j["witness"] = ids(r.witness);
    j["nodes"] = r.nodes_explored;
    j["elapsed_ms"] = ms;
    out << j.dump() << '\n';
  } else {
    out << kind.name() << " = " << r.value << " (" << to_string(r.bound) << ")\n"
        << "witness " << ids_text(r.witness) << '\n'
        << "nodes " << r.nodes_explored << ", " << ms << " ms\n";
  }
}

void emit_set(const Options& o, std::ostream& out, const std::string& what, const VertexSet& s, bool valid) {
  if (o.format == "jsonl") {
    ordered_json j;
    j["algo"] = what;
    j["size"] = s.size();
    j["valid"] = valid;
    j["set"] = ids(s);
    out << j.dump() << '\n';
  } else {
    out << what << ": " << s.size() << " vertices " << ids_text(s) << (valid ? "" : " (INVALID)") << '\n';
  }
}

}  // namespace

std::string report_json(const ClaimReport& r, bool stable_timing) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (r.expected.value) j["expected"] = *r.expected.value;
  else j["expected"] = r.expected.text;
  j["computed"] = r.computed;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? ids(*r.witness) : ordered_json(nullptr);
  j["elapsed_ms"] = stable_timing ? 0 : r.elapsed_ms;
  if (r.status == Status::fail || r.status == Status::timeout) j["detail"] = r.detail;
  if (r.status == Status::fail) j["instance"] = r.instance;
  return j.dump();
}

std::string report_text(const ClaimReport& r, bool stable_timing) {
  std::ostringstream os;
  os << r.claim_id << ' ' << to_string(r.status) << " (";
  for (std::size_t i = 0; i < r.params.size(); ++i)
    os << (i ? " " : "") << r.params[i].first << '=' << r.params[i].second;
  os << ") expected " << r.expected.text << "; computed [";
  for (std::size_t i = 0; i < r.computed.size(); ++i) os << (i ? " " : "") << r.computed[i];
  os << "]; " << r.detail << "; " << (stable_timing ? 0 : r.elapsed_ms) << " ms";
  if (r.status == Status::fail && !r.instance.empty()) os << "\n--- instance ---\n" << r.instance;
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"indsub: induced outerplanar/outerplane subgraphs and domination toolkit"};
  app.name("indsub");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_flag("--stable-timing", o.stable_timing, "Report elapsed_ms as 0 for byte-stable output");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a family instance");
  std::string family, out_path, certs_path;
  int k = 0, n = 0, extras = 3;
  std::uint64_t seed = 0;
  gen->add_option("--family", family)->required()->check(CLI::IsMember(family_names()));
  gen->add_option("--k", k, "Family parameter (m for k113chain)");
  gen->add_option("--n", n, "Order for random families");
  gen->add_option("--seed", seed);
  gen->add_option("--extras", extras, "Extra vertices for nested");
  gen->add_option("--out", out_path)->required();
  gen->add_option("--certs", certs_path);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact invariant by branch and bound");
  std::string invariant, input;
  int t = 0;
  Budget budget;
  solve_cmd->add_option("--invariant", invariant)->required();
  solve_cmd->add_option("--t", t, "Treewidth bound for twle");
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--budget-nodes", budget.max_nodes);
  solve_cmd->add_option("--budget-secs", budget.max_seconds);
  solve_cmd->add_option("--threads", budget.threads)->check(CLI::Range(1, 256));
  solve_cmd->add_option("--certs", certs_path, "Certificate sidecar (default: <input stem>.cert if present)");

  // partition
  auto* part = app.add_subcommand("partition", "Unique colour classes of a k-tree");
  part->add_option("--k", k)->required();
  part->add_option("--input", input)->required();

  // extract
  auto* extract = app.add_subcommand("extract", "Constructive extraction");
  std::string algo;
  int s = 0;
  extract->add_option("--algo", algo)->required()->check(CLI::IsMember({"boundedtw", "outerplanar45", "outerplane23"}));
  extract->add_option("--s", s);
  extract->add_option("--t", t);
  extract->add_option("--input", input)->required();

  // check
  auto* check = app.add_subcommand("check", "Run claim checks");
  std::string claim, suite;
  std::vector<std::string> claim_params;
  int threads = 1;
  auto* claim_opt = check->add_option("--claim", claim);
  auto* suite_opt = check->add_option("--suite", suite)->check(CLI::IsMember({"fast", "standard", "long"}));
  claim_opt->excludes(suite_opt);
  check->add_option("params", claim_params, "key=value overrides for --claim");
  check->add_option("--threads", threads)->check(CLI::Range(1, 256));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen) {
      FamilyInstance fi = make_family(family, k, n, seed, extras);
      write_file(out_path, write_graph(fi.pg));
      if (!certs_path.empty()) write_file(certs_path, write_certificates(fi.certificates));
      out << family << ": n=" << fi.pg.order() << " m=" << fi.pg.size();
      for (const auto& [name, set] : fi.certificates.certs) out << ' ' << name << '=' << set.size();
      out << '\n';
      return 0;
    }
    if (*solve_cmd) {
      InvariantKind kind = InvariantKind::parse(invariant, t);
      ParsedGraph pg = load(input);
      if (certs_path.empty()) {
        std::filesystem::path side = std::filesystem::path(input).replace_extension(".cert");
        if (std::filesystem::exists(side)) certs_path = side.string();
      }
      std::vector<VertexSet> seeds;
      if (!certs_path.empty()) {
        Certificates c = read_certificates(read_file(certs_path), pg.graph.order());
        for (const auto& [name, set] : c.certs) seeds.push_back(set);
      }
      const PlaneGraph* plane = pg.plane ? &*pg.plane : nullptr;
      if (kind.needs_embedding() && !plane) throw BadParameter("soprime needs rotation lines in the input");
      SolveResult r = solve(pg.graph, plane, kind, budget, seeds);
      emit_solve(o, out, kind, r);
      return r.optimal ? 0 : 3;
    }
    if (*part) {
      ParsedGraph pg = load(input);
      Partition p = ktree_partition(pg.graph, k);
      if (o.format == "jsonl") {
        ordered_json j;
        j["k"] = k;
        j["classes"] = ordered_json::array();
        for (const auto& c : p.classes) j["classes"].push_back(ids(c));
        out << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < p.classes.size(); ++i)
          out << "class " << i << ": " << ids_text(p.classes[i]) << '\n';
      }
      return 0;
    }
    if (*extract) {
      ParsedGraph pg = load(input);
      const Graph& g = pg.graph;
      VertexSet res;
      bool valid = false;
      if (algo == "boundedtw") {
        res = extract_bounded_tw(g, s, t);
        Graph h = g.induced(res);
        valid = t == 1 ? is_forest(h) : treewidth_at_most(h, t);
      } else if (algo == "outerplanar45") {
        res = extract_outerplanar_4_5(g);
        valid = is_outerplanar(g.induced(res));
      } else {
        if (!pg.plane) throw BadParameter("outerplane23 needs rotation lines in the input");
        res = extract_outerplane_2_3(*pg.plane);
        valid = is_outerplane(*pg.plane, res);
      }
      emit_set(o, out, algo, res, valid);
      return valid ? 0 : 1;
    }
    if (*check) {
      std::vector<ClaimReport> reports;
      if (!claim.empty()) {
        reports.push_back(run_claim(claim, parse_claim_params(claim_params)));
      } else if (!suite.empty()) {
        if (!claim_params.empty()) throw BadParams("params only apply to --claim");
        reports = run_suite(parse_tier(suite), threads);
      } else {
        err << "check needs --claim or --suite\n";
        return 2;
      }
      for (const auto& r : reports)
        out << (o.format == "jsonl" ? report_json(r, o.stable_timing) : report_text(r, o.stable_timing)) << '\n';
      return exit_code(reports);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace indsub
