#include "cli.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumfree/bounds.hpp"
#include "sumfree/config.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/graph_io.hpp"
#include "sumfree/group.hpp"
#include "sumfree/report.hpp"
#include "sumfree/sets.hpp"

namespace sumfree::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Result {
  json record;
  int code = kExitOk;
  /// Preformatted report for commands with their own serializers.
  std::optional<std::string> json_text;
  std::optional<std::string> csv_text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const json& record, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: os << record.dump(2) << '\n'; break;
    case Format::Text:
      for (const auto& [key, value] : record.items()) {
        if (value.is_array()) {
          for (const auto& e : value) os << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
        } else {
          os << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
      }
      break;
    case Format::Csv: {
      std::string header, row;
      for (const auto& [key, value] : record.items()) {
        if (value.is_array()) continue;
        header += (header.empty() ? "" : ",") + key;
        row += (row.empty() ? "" : ",") + csv_cell(value);
      }
      os << header << '\n' << row << '\n';
      for (const auto& [key, value] : record.items()) {
        if (!value.is_array()) continue;
        os << '\n' << key << '\n';
        for (const auto& e : value) os << csv_cell(e) << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string vertex_set(VertexMask s) {
  std::string out = "{";
  bool first = true;
  for (; s != 0; s &= s - 1) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(std::countr_zero(s));
  }
  return out + "}";
}

Graph load_graph(const std::string& literal, const std::string& file) {
  if (!file.empty()) {
    const auto text = read_file(file);
    return parse_graph(text, detect_format(text));
  }
  if (literal.empty()) throw std::invalid_argument("a graph is required (--graph or --graph-file)");
  return parse_graph_literal(literal);
}

Packing load_packing(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("packing file is not valid JSON: " + std::string(e.what()));
  }
  Packing p;
  try {
    if (j.contains("matching")) {
      for (const auto& e : j.at("matching")) p.matching.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (j.contains("c4s")) {
      for (const auto& e : j.at("c4s")) {
        if (e.size() != 4) throw std::invalid_argument("each c4 lists exactly four vertices");
        p.c4s.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
      }
    }
    if (j.contains("tls")) {
      for (const auto& e : j.at("tls")) p.tls.push_back({e.at("l").get<int>(), e.at("vertices").get<std::vector<int>>()});
    }
    if (j.contains("deg4sets")) {
      for (const auto& e : j.at("deg4sets")) p.deg4sets.push_back(e.get<std::vector<int>>());
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed packing: " + std::string(e.what()));
  }
  return p;
}

json subset_list(const GroupSpec& g, const std::vector<ElementSet>& sets) {
  json list = json::array();
  for (const auto& s : sets) list.push_back(format_subset(g, s));
  return list;
}

// ---------------------------------------------------------------------------

struct GroupArgs {
  std::string group;
  bool elements = false;
};

Result cmd_group(const GroupArgs& a, const Config& cfg) {
  const auto g = parse_group(a.group);
  Result r;
  auto& j = r.record;
  j["group"] = g.to_string();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["type"] = classify(g).to_string();
  try {
    j["mu_formula"] = mu_formula(g);
  } catch (const std::logic_error&) {
    j["mu_formula"] = nullptr;
  }
  if (g.order() <= cfg.mu_cap) {
    j["mu_brute"] = mu_brute(g, cfg.mu_cap);
    j["mu_star_brute"] = mu_star_brute(g, cfg.mu_cap);
  }
  j["two_rank"] = g.two_rank();
  if (g.order() % 2 == 0 && g.order() <= kDefaultElementCap) {
    const auto obs = check_doubling_observation(g);
    j["torsion_solutions"] = obs.torsion_solutions;
    j["doubling_observation"] = obs.ok() ? "ok" : *obs.failure;
    if (!obs.ok()) r.code = kExitViolation;
  }
  if (a.elements) {
    json list = json::array();
    for (const auto& e : elements(g)) list.push_back(g.format(e));
    j["elements"] = std::move(list);
  }
  return r;
}

struct MsfArgs {
  std::string group;
  bool distinct = false;
  std::string within_a;
  std::string within_s;
};

Result cmd_msf(const MsfArgs& a, const Config& cfg) {
  const auto g = parse_group(a.group);
  const auto mode = a.distinct ? SumFreeMode::Distinct : SumFreeMode::SumFree;
  std::vector<ElementSet> sets;
  if (!a.within_a.empty() || !a.within_s.empty()) {
    sets = enumerate_msf_within(g, parse_subset(g, a.within_a), parse_subset(g, a.within_s), mode);
  } else {
    sets = enumerate_msf(g, mode, cfg.msf_cap);
  }
  Result r;
  r.record["group"] = g.to_string();
  r.record["mode"] = to_string(mode);
  r.record["count"] = sets.size();
  r.record["sets"] = subset_list(g, sets);
  return r;
}

struct MisArgs {
  std::string graph;
  std::string graph_file;
  std::optional<int> vertex;
  bool list = false;
  bool matching = false;
  std::string emit;
};

Result cmd_mis(const MisArgs& a) {
  const auto g = load_graph(a.graph, a.graph_file);
  Result r;
  auto& j = r.record;
  j["mis"] = mis_count(g);
  if (a.vertex) {
    const auto split = mis_split(g, *a.vertex);
    j["with"] = split.with;
    j["without"] = split.without;
  }
  if (a.matching) j["nu"] = matching_number(g);
  if (!a.emit.empty()) {
    const auto format = a.emit == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    j["encoded"] = emit_graph(g, format);
  }
  if (a.list) {
    json sets = json::array();
    for (auto s : mis_enumerate(g)) sets.push_back(vertex_set(s));
    j["sets"] = std::move(sets);
  }
  return r;
}

struct LinkArgs {
  std::string group;
  std::string a;
  std::string s;
  bool distinct = false;
  bool verify = false;
};

Result cmd_link(const LinkArgs& a, const Config& cfg) {
  const auto g = parse_group(a.group);
  Result r;
  if (a.verify) {
    const auto summary = verify_link_reduction(g, cfg.link_cap);
    r.json_text = to_json(summary);
    r.record["group"] = g.to_string();
    r.record["maximal_sets"] = summary.maximal_sets;
    r.record["pairs"] = summary.pairs;
    r.record["violations_full"] = summary.violations_full;
    r.record["violations_distinct"] = summary.violations_distinct;
    r.record["equal_full"] = summary.equal_full;
    r.record["equal_distinct"] = summary.equal_distinct;
    if (summary.first_violation) r.record["first_violation"] = *summary.first_violation;
    if (!summary.ok()) r.code = kExitViolation;
    return r;
  }
  const auto A = parse_subset(g, a.a);
  const auto S = parse_subset(g, a.s);
  const auto link = link_graph(g, A, S, a.distinct ? LinkKind::Distinct : LinkKind::Full);
  auto name = [&](int v) { return g.format(g.element_at(link.vertex_map[static_cast<std::size_t>(v)])); };
  auto& j = r.record;
  j["group"] = g.to_string();
  j["kind"] = to_string(link.kind);
  j["vertices"] = link.graph.order();
  j["edge_count"] = link.graph.edge_count();
  j["loop_count"] = std::popcount(link.graph.loops());
  j["mis"] = mis_count(link.graph);
  j["nu"] = matching_number(link.graph.without_looped_vertices());
  json edges = json::array();
  for (auto [u, v] : link.graph.edges()) edges.push_back("edge " + name(u) + " " + name(v));
  for (int v = 0; v < link.graph.order(); ++v) {
    if (link.graph.has_loop(v)) edges.push_back("loop " + name(v));
  }
  j["edges"] = std::move(edges);
  return r;
}

struct BoundArgs {
  std::optional<int> m, n, k, l;
  std::string kind = "matching";
  std::string graph;
  std::string graph_file;
  std::string packing;
  bool constants = false;
  std::string big_c = "100";
  std::string small_c = "1/10000";
  std::string order = "1000";
  int block = 16;
};

Result cmd_bound(const BoundArgs& a) {
  Result r;
  if (a.constants) {
    ConstantPoint p;
    p.big_c = parse_rational(a.big_c);
    p.small_c = parse_rational(a.small_c);
    p.n = parse_rational(a.order);
    p.l = a.block;
    r.record["C"] = to_string(p.big_c);
    r.record["c"] = to_string(p.small_c);
    r.record["n"] = to_string(p.n);
    r.record["l"] = p.l;
    json checks = json::array();
    for (const auto& c : constant_checks(p)) {
      checks.push_back(c.name + ": " + c.relation + " " + (c.holds ? "holds" : "fails"));
    }
    r.record["checks"] = std::move(checks);
    return r;
  }
  if (!a.graph.empty() || !a.graph_file.empty()) {
    const auto g = load_graph(a.graph, a.graph_file);
    std::optional<Packing> packing;
    if (!a.packing.empty()) packing = load_packing(a.packing);
    const auto report = check_graph(g, packing);
    r.json_text = to_json(report);
    r.csv_text = to_csv(report);
    auto& j = r.record;
    j["n"] = report.n;
    j["mis"] = report.mis;
    j["nu"] = report.nu;
    j["bound"] = report.bound.to_string();
    j["matching_bound"] = report.matching_bound.to_string();
    for (const auto& b : report.stability) j[b.name + "_bound"] = b.value.to_string();
    j["satisfied"] = report.satisfied;
    j["tight"] = report.tight;
    j["extremal_class"] = to_string(report.extremal);
    if (!report.ok()) r.code = kExitViolation;
    return r;
  }
  if (!a.m || !a.n) throw std::invalid_argument("bound needs --m and --n, --graph, or --constants");
  BoundValue v;
  if (a.kind == "matching") {
    v = bound_matching(*a.m, *a.n);
  } else if (a.kind == "degree4") {
    v = bound_degree4(a.k.value_or(0), *a.m, *a.n);
  } else if (a.kind == "tl") {
    if (!a.l) throw std::invalid_argument("--kind tl needs --l");
    v = bound_tl(a.k.value_or(0), *a.l, *a.m, *a.n);
  } else if (a.kind == "c4") {
    v = bound_c4(a.k.value_or(0), *a.m, *a.n);
  } else {
    throw std::invalid_argument("unknown bound kind '" + a.kind + "'");
  }
  r.record["kind"] = a.kind;
  r.record["bound"] = v.to_string();
  return r;
}

struct SweepArgs {
  std::optional<int> n;
  std::optional<unsigned> jobs;
  std::size_t max_recorded = 64;
};

Result cmd_sweep(const SweepArgs& a, const Config& cfg) {
  SweepOptions options;
  options.n_max = a.n.value_or(cfg.n_max);
  options.jobs = a.jobs.value_or(cfg.jobs);
  options.max_recorded = a.max_recorded;
  const auto summary = exhaustive_sweep(options);
  Result r;
  r.json_text = to_json(summary);
  r.csv_text = to_csv(summary);
  r.record["n_max"] = summary.n_max;
  r.record["graphs"] = summary.graphs;
  r.record["violations"] = summary.violations;
  json levels = json::array();
  for (const auto& l : summary.levels) {
    levels.push_back("n=" + std::to_string(l.n) + " graphs=" + std::to_string(l.graphs) +
                     " tight=" + std::to_string(l.matching_tight) + " violations=" + std::to_string(l.violations));
  }
  for (const auto& v : summary.recorded) {
    levels.push_back("violation n=" + std::to_string(v.n) + " check=" + v.check + " graph6=" + v.graph6 + " " +
                     v.detail);
  }
  r.record["levels"] = std::move(levels);
  if (!summary.ok()) r.code = kExitViolation;
  return r;
}

struct ConstructArgs {
  std::string group;
  std::string pattern;
  std::optional<std::size_t> sample;
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::string mode = "auto";
  bool list = false;
  std::optional<unsigned> jobs;
};

Result cmd_construct(const ConstructArgs& a, const Config& cfg) {
  const auto g = parse_group(a.group, std::uint64_t{1} << 24);
  const auto pattern = parse_af_pattern(a.pattern);
  AfFamilyOptions options;
  options.sample_size = a.sample.value_or(cfg.sample_size);
  options.seed = a.seed.value_or(cfg.seed);
  const auto family = construct_af_family(g, pattern, options);
  Result r;
  auto& j = r.record;
  j["group"] = g.to_string();
  j["pattern"] = to_string(pattern);
  j["index_size"] = family.index_size;
  j["exhaustive"] = family.exhaustive;
  if (!family.exhaustive) j["seed"] = options.seed;
  j["family_size"] = family.sets.size();
  j["set_size"] = family.sets.empty() ? 0 : family.sets.front().size();
  j["special"] = g.format(g.element_at(family.special));
  if (a.verify) {
    SumFreeMode mode;
    if (a.mode == "auto") {
      mode = pattern == AfPattern::Prop42 ? SumFreeMode::Distinct : SumFreeMode::SumFree;
    } else if (a.mode == "sum_free") {
      mode = SumFreeMode::SumFree;
    } else if (a.mode == "distinct") {
      mode = SumFreeMode::Distinct;
    } else {
      throw std::invalid_argument("unknown mode '" + a.mode + "'");
    }
    const auto verdict = verify_family(g, family.sets, mode, a.jobs.value_or(cfg.jobs));
    j["mode"] = to_string(mode);
    j["verdict"] = verdict.describe(g);
    if (!verdict.ok()) r.code = kExitViolation;
  }
  if (a.list) j["sets"] = subset_list(g, family.sets);
  return r;
}

Result cmd_pipeline(const std::string& group, const Config& cfg) {
  const auto g = parse_group(group);
  const auto report = check_even_order_pipeline(g, cfg.pipeline_cap);
  Result r;
  r.json_text = to_json(report);
  r.csv_text = to_csv(report);
  const auto parsed = json::parse(*r.json_text);
  for (const auto& [key, value] : parsed.items()) {
    if (!value.is_null()) r.record[key] = value;
  }
  if (!report.ok()) r.code = kExitViolation;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-free sets in finite Abelian groups and maximal independent set bounds", "sumfree"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  std::string config_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--config", config_path, "key=value settings file");

  std::function<Result(const Config&)> action;
  std::string default_format = "text";

  GroupArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "Group structure, type and mu");
  group_cmd->add_option("--group,-g", group_args.group, "Group literal, e.g. \"Z2^3 x Z3\"")->required();
  group_cmd->add_flag("--elements", group_args.elements, "List elements");
  group_cmd->callback([&] { action = [&](const Config& c) { return cmd_group(group_args, c); }; });

  MsfArgs msf_args;
  auto* msf_cmd = app.add_subcommand("msf", "Maximal (distinct) sum-free sets");
  msf_cmd->add_option("--group,-g", msf_args.group, "Group literal")->required();
  msf_cmd->add_flag("--distinct", msf_args.distinct, "Distinct sum-free sets");
  msf_cmd->add_option("--within-a", msf_args.within_a, "Restrict to A u S with this A");
  msf_cmd->add_option("--within-s", msf_args.within_s, "Required subset S");
  msf_cmd->callback([&] { action = [&](const Config& c) { return cmd_msf(msf_args, c); }; });

  MisArgs mis_args;
  auto* mis_cmd = app.add_subcommand("mis", "Count maximal independent sets");
  mis_cmd->add_option("--graph", mis_args.graph, "Gadget literal (K3, D6, T3+, K2|K4) or inline edge list");
  mis_cmd->add_option("--graph-file", mis_args.graph_file, "edge_list or graph6 file");
  mis_cmd->add_option("--vertex", mis_args.vertex, "Split the count at this vertex");
  mis_cmd->add_flag("--list", mis_args.list, "List the sets");
  mis_cmd->add_flag("--matching", mis_args.matching, "Also report the matching number");
  mis_cmd->add_option("--emit", mis_args.emit, "Re-encode the graph")->check(CLI::IsMember({"edge_list", "graph6"}));
  mis_cmd->callback([&] { action = [&](const Config&) { return cmd_mis(mis_args); }; });

  LinkArgs link_args;
  auto* link_cmd = app.add_subcommand("link", "Link graph of S on A");
  link_cmd->add_option("--group,-g", link_args.group, "Group literal")->required();
  link_cmd->add_option("--a", link_args.a, "Subset A");
  link_cmd->add_option("--s", link_args.s, "Subset S");
  link_cmd->add_flag("--distinct", link_args.distinct, "Distinct link graph");
  link_cmd->add_flag("--verify", link_args.verify, "Check msf(A u S; S) <= mis over all pairs");
  link_cmd->callback([&] { action = [&](const Config& c) { return cmd_link(link_args, c); }; });

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate bounds or check a graph against them");
  bound_cmd->add_option("--m", bound_args.m, "Matching size");
  bound_cmd->add_option("--n", bound_args.n, "Vertex count");
  bound_cmd->add_option("--k", bound_args.k, "Number of packed structures");
  bound_cmd->add_option("--l", bound_args.l, "Cycle length of the T_l copies");
  bound_cmd->add_option("--kind", bound_args.kind, "Bound formula")
      ->check(CLI::IsMember({"matching", "degree4", "tl", "c4"}));
  bound_cmd->add_option("--graph", bound_args.graph, "Graph literal to check");
  bound_cmd->add_option("--graph-file", bound_args.graph_file, "Graph file to check");
  bound_cmd->add_option("--packing", bound_args.packing, "JSON packing file");
  bound_cmd->add_flag("--constants", bound_args.constants, "Evaluate the exponent inequalities");
  bound_cmd->add_option("--big-c", bound_args.big_c, "C for --constants");
  bound_cmd->add_option("--small-c", bound_args.small_c, "c for --constants");
  bound_cmd->add_option("--order", bound_args.order, "n for --constants");
  bound_cmd->add_option("--block", bound_args.block, "l for --constants");
  bound_cmd->callback([&] { action = [&](const Config&) { return cmd_bound(bound_args); }; });

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive check over labeled graphs");
  sweep_cmd->add_option("--n", sweep_args.n, "Largest vertex count (<= 8)");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads");
  sweep_cmd->add_option("--max-recorded", sweep_args.max_recorded, "Violations kept in the report");
  sweep_cmd->callback([&] {
    default_format = "json";
    action = [&](const Config& c) { return cmd_sweep(sweep_args, c); };
  });

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Explicit A_f families");
  construct_cmd->add_option("--group,-g", construct_args.group, "Group literal")->required();
  construct_cmd->add_option("--pattern", construct_args.pattern, "thm31, prop42 or prop43")->required();
  construct_cmd->add_option("--sample", construct_args.sample, "Sample size for large index sets");
  construct_cmd->add_option("--seed", construct_args.seed, "Sampling seed (default 0)");
  construct_cmd->add_flag("--verify", construct_args.verify, "Check members and pairwise unions");
  construct_cmd->add_option("--mode", construct_args.mode, "auto, sum_free or distinct");
  construct_cmd->add_flag("--list", construct_args.list, "List the sets");
  construct_cmd->add_option("--jobs", construct_args.jobs, "Worker threads for --verify");
  construct_cmd->callback([&] { action = [&](const Config& c) { return cmd_construct(construct_args, c); }; });

  std::string pipeline_group;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Even-order link-graph checks");
  pipeline_cmd->add_option("--group,-g", pipeline_group, "Even-order group literal")->required();
  pipeline_cmd->callback([&] { action = [&](const Config& c) { return cmd_pipeline(pipeline_group, c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    const auto name = format_name.empty() ? default_format : format_name;
    const Format format = name == "json" ? Format::Json : name == "csv" ? Format::Csv : Format::Text;
    Result result = action(cfg);
    if (format == Format::Json && result.json_text) {
      out << *result.json_text;
    } else if (format == Format::Csv && result.csv_text) {
      out << *result.csv_text;
    } else {
      out << render(result.record, format);
    }
    return result.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sumfree::cli
