// Command-line front end: groups, graphs, automorphisms, censuses, bounds and lemma oracles.
// Machine output goes to stdout, diagnostics to stderr. Exit status: 0 success, 1 a check failed, 2 bad input.

#include "haar/autgroup.hpp"
#include "haar/census.hpp"
#include "haar/error.hpp"
#include "haar/oracles.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace haar;

namespace {

constexpr const char * kSchemaVersion = "1";

struct Manifest
{
  std::vector<std::string> argv;
  json seeds = json::array();
  json caps = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json to_json() const
  {
    json j;
    j["command_line"] = argv;
    j["seeds"] = seeds;
    j["caps"] = caps;
    j["version"] = HAAR_VERSION;
    j["schema"] = kSchemaVersion;
    j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return j;
  }
};

void emit(json j, const Manifest & m)
{
  j["manifest"] = m.to_json();
  std::cout << j.dump() << '\n';
}

std::uint64_t parse_seed(const std::string & text)
{
  std::size_t used = 0;
  unsigned long long v = std::stoull(text, &used, 0);
  if (used != text.size())
    throw ParseError("bad seed '" + text + "'");
  return v;
}

/// Decimal, scientific, or 2^k.
long double parse_n(const std::string & text)
{
  if (text.rfind("2^", 0) == 0)
    return std::exp2(std::stold(text.substr(2)));
  std::size_t used = 0;
  long double v = std::stold(text, &used);
  if (used != text.size())
    throw ParseError("bad --n value '" + text + "'");
  return v;
}

std::shared_ptr<const GroupTable> load_group(const std::string & spec)
{
  return std::make_shared<const GroupTable>(make_group(spec));
}

SetMatrix parse_matrix(const GroupTable & G, int m, const std::string & text)
{
  json j = json::parse(text);
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw ParseError("--matrix must be an m x m JSON array of hex masks");
  std::vector<ElementSet> entries;
  for (const auto & row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw ParseError("--matrix must be an m x m JSON array of hex masks");
    for (const auto & e : row)
      entries.push_back(ElementSet::from_hex(static_cast<std::size_t>(G.order()), e.get<std::string>()));
  }
  return SetMatrix(m, std::move(entries));
}

struct GraphArgs
{
  std::string kind;  // cayley | haar | mcayley
  std::string group;
  std::string set = "0x0";
  int m = 2;
  std::string matrix;
};

void add_graph_args(CLI::App * cmd, GraphArgs & a)
{
  cmd->add_option("kind", a.kind, "cayley | haar | mcayley")->required()->check(CLI::IsMember({"cayley", "haar", "mcayley"}));
  cmd->add_option("group", a.group, "group spec, e.g. C4, Q8, Dic(C6,3), C2^3")->required();
  cmd->add_option("--set", a.set, "connection set as a hex mask, bit g = element g");
  cmd->add_option("--m", a.m, "number of blocks (mcayley)");
  cmd->add_option("--matrix", a.matrix, "set-matrix as a JSON array of hex masks (mcayley)");
}

ColoredDigraph build_graph(const GroupTable & G, const GraphArgs & a)
{
  const auto n = static_cast<std::size_t>(G.order());
  if (a.kind == "cayley")
    return cayley_digraph(G, ElementSet::from_hex(n, a.set));
  if (a.kind == "haar")
    return haar_graph(G, ElementSet::from_hex(n, a.set));
  if (a.matrix.empty())
    throw ParseError("mcayley needs --matrix");
  return m_cayley_digraph(G, parse_matrix(G, a.m, a.matrix));
}

json group_info(const GroupTable & G)
{
  const auto cls = classify_group(G);
  json j;
  j["group"] = G.name();
  j["order"] = G.order();
  j["abelian"] = cls.is_abelian;
  j["exponent"] = cls.exponent;
  j["elementary_abelian_2"] = cls.is_elementary_abelian_2;
  j["abelian_exponent_gt_2"] = cls.is_abelian_exp_gt_2;
  j["generalized_dicyclic"] = cls.is_generalized_dicyclic;
  j["q8_times_e2"] = cls.is_q8_times_e2;
  if (cls.q8)
    j["q8_times_e2_ell"] = cls.q8->ell;
  if (cls.dicyclic) {
    j["dicyclic_witness"] = {{"abelian_half", cls.dicyclic->abelian_half.to_hex()},
                             {"x", G.label(cls.dicyclic->x)},
                             {"y", G.label(cls.dicyclic->y)}};
  }
  j["c"] = c_value(G, G.full_set());
  j["involutions"] = static_cast<int>(G.order_le2(G.full_set()).count()) - 1;
  json labels = json::array();
  for (Elem g = 0; g < G.order(); ++g)
    labels.push_back(G.label(g));
  j["labels"] = labels;
  return j;
}

}  // namespace

int main(int argc, char ** argv)
{
  Manifest manifest;
  manifest.argv.assign(argv, argv + argc);

  CLI::App app{"Haar graphs, Cayley digraphs and m-Cayley digraphs: automorphisms, censuses, bounds and lemma checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HAAR_VERSION);

  // group info
  auto * group_cmd = app.add_subcommand("group", "group information");
  group_cmd->require_subcommand(1);
  std::string info_spec;
  auto * info_cmd = group_cmd->add_subcommand("info", "order, exponent, classification, c(G)");
  info_cmd->add_option("spec", info_spec, "group spec")->required();

  // graph
  GraphArgs graph_args;
  std::string format = "edges";
  auto * graph_cmd = app.add_subcommand("graph", "emit a graph");
  add_graph_args(graph_cmd, graph_args);
  graph_cmd->add_option("--format", format, "edges | dot")->check(CLI::IsMember({"edges", "dot"}));

  // aut
  GraphArgs aut_args;
  bool plus = false;
  auto * aut_cmd = app.add_subcommand("aut", "automorphism group of a graph");
  add_graph_args(aut_cmd, aut_args);
  aut_cmd->add_flag("--plus", plus, "Aut^+ of a Haar graph (both parts fixed setwise)");

  // census
  auto * census_cmd = app.add_subcommand("census", "exhaustive or Monte-Carlo census");
  census_cmd->require_subcommand(1);
  struct CensusArgs
  {
    std::string group;
    std::string family = "subsets";
    int m = 1;
    std::string predicate;
    std::uint64_t samples = 1000;
    std::string seed = "0";
    int workers = 1;
    std::string trace;
    int cap = 24;
  } cargs;
  auto add_census = [&](CLI::App * c, bool mc) {
    c->add_option("--group", cargs.group, "group spec")->required();
    c->add_option("--family", cargs.family, "subsets | inverse-closed | matrices | inverse-closed-matrices | skew");
    c->add_option("--m", cargs.m, "set-matrix size");
    c->add_option("--predicate", cargs.predicate, "drr | grr | hgr | haar-optimal | dmsr | gmsr | mpgsr")->required();
    c->add_option("--workers", cargs.workers, "worker threads (changes wall time only)");
    c->add_option("--trace", cargs.trace, "write one CSV row per evaluation to this file");
    if (mc) {
      c->add_option("--samples", cargs.samples, "number of samples");
      c->add_option("--seed", cargs.seed, "64-bit seed, decimal or 0x-hex");
    } else {
      c->add_option("--cap", cargs.cap, "largest family bit length enumerated");
    }
  };
  auto * exh_cmd = census_cmd->add_subcommand("exhaustive", "every family member");
  add_census(exh_cmd, false);
  auto * mc_cmd = census_cmd->add_subcommand("mc", "i.i.d. uniform samples");
  add_census(mc_cmd, true);

  // bounds
  std::string n_text;
  double eps = 0.1;
  int bound_m = 1;
  double ceiling = 96;
  auto * bounds_cmd = app.add_subcommand("bounds", "evaluate bound formulas");
  bounds_cmd->require_subcommand(0, 1);
  bounds_cmd->add_option("--n", n_text, "n (decimal, scientific or 2^k)");
  bounds_cmd->add_option("--eps", eps, "epsilon in (0, 0.1]");
  bounds_cmd->add_option("--m", bound_m, "m");
  auto * neps_cmd = bounds_cmd->add_subcommand("find-neps", "locate n_eps");
  neps_cmd->add_option("--eps", eps, "epsilon in (0, 0.1]");
  neps_cmd->add_option("--ceiling", ceiling, "log2 of the scan and verification ceiling");

  // verify
  std::vector<std::string> ids;
  bool all = false;
  bool raise_caps = false;
  OracleRequest req;
  std::string v_group, v_set, v_core, v_h, v_kset;
  int v_k = 0;
  int v_degree = 0;
  auto * verify_cmd = app.add_subcommand("verify", "brute-force lemma checks");
  verify_cmd->add_option("ids", ids, "lemma ids (" + [] {
    std::string s;
    for (const auto & id : oracle_ids())
      s += (s.empty() ? "" : " ") + id;
    return s;
  }() + ")");
  verify_cmd->add_flag("--all", all, "every oracle over its default grid");
  verify_cmd->add_flag("--raise-caps", raise_caps, "raise every per-oracle cap");
  auto * o_group = verify_cmd->add_option("--group", v_group, "group spec");
  auto * o_set = verify_cmd->add_option("--set", v_set, "hex mask S (L2.2)");
  auto * o_core = verify_cmd->add_option("--core", v_core, "hex mask of the normal subgroup C (L5.1)");
  auto * o_h = verify_cmd->add_option("--H", v_h, "hex mask of H (L2.8)");
  auto * o_kset = verify_cmd->add_option("--K", v_kset, "hex mask of K (L2.8)");
  auto * o_k = verify_cmd->add_option("--k", v_k, "set size (L2.5, L2.6)");
  verify_cmd->add_option("--gens", req.generators, "generators in cycle notation (L2.9)");
  auto * o_degree = verify_cmd->add_option("--degree", v_degree, "degree for --gens (L2.9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (info_cmd->parsed()) {
      emit(group_info(make_group(info_spec)), manifest);
      return 0;
    }

    if (graph_cmd->parsed()) {
      auto G = make_group(graph_args.group);
      auto g = build_graph(G, graph_args);
      std::cout << (format == "dot" ? to_dot(g) : to_edge_list(g));
      return 0;
    }

    if (aut_cmd->parsed()) {
      auto G = make_group(aut_args.group);
      ColoredDigraph g = build_graph(G, aut_args);
      if (plus) {
        if (aut_args.kind != "haar")
          throw PreconditionError("--plus applies to Haar graphs");
        g = colored_haar_graph(G, ElementSet::from_hex(static_cast<std::size_t>(G.order()), aut_args.set));
      }
      auto r = search_automorphisms(g);
      json j;
      j["graph"] = {{"kind", aut_args.kind}, {"group", G.name()}, {"vertices", g.vertex_count()}, {"plus", plus}};
      j["order"] = r.order.str();
      json gens = json::array();
      for (const auto & p : r.trace.generators)
        gens.push_back(p.to_cycles());
      j["generators"] = gens;
      j["base"] = r.base;
      j["basic_orbit_lengths"] = r.basic_orbit_lengths;
      j["group_order"] = G.order();
      j["aut_is_G"] = r.order == G.order();
      emit(j, manifest);
      return 0;
    }

    if (exh_cmd->parsed() || mc_cmd->parsed()) {
      const bool mc = mc_cmd->parsed();
      auto G = load_group(cargs.group);
      FamilySpec family(parse_family_kind(cargs.family), G, cargs.m);
      const Predicate p = parse_predicate(cargs.predicate);
      CensusOptions options;
      options.workers = cargs.workers;
      options.trace = !cargs.trace.empty();
      options.exhaustive_cap_bits = cargs.cap;
      manifest.caps = {{"exhaustive_cap_bits", cargs.cap}};
      CensusReport r;
      if (mc) {
        const std::uint64_t seed = parse_seed(cargs.seed);
        manifest.seeds.push_back(cargs.seed);
        r = monte_carlo_census(family, p, cargs.samples, seed, options);
      } else {
        r = exhaustive_census(family, p, options);
      }
      json j = to_json(r);
      if (mc)
        j["seed"] = cargs.seed;
      if (options.trace) {
        std::ofstream out(cargs.trace);
        if (!out)
          throw std::runtime_error("cannot write " + cargs.trace);
        out << trace_csv(r);
      }
      emit(j, manifest);
      return 0;
    }

    if (neps_cmd->parsed()) {
      NepsConfig config;
      config.ceiling_log2 = ceiling;
      manifest.caps = {{"ceiling_log2", ceiling}};
      json j = to_json(find_n_eps(eps, config));
      j["eps"] = eps;
      j["exceeds_2^67"] = BigNat(j["n_eps"].get<std::string>()) > (BigNat(1) << 67);
      emit(j, manifest);
      return 0;
    }

    if (bounds_cmd->parsed()) {
      if (n_text.empty())
        throw ParseError("bounds needs --n (or the find-neps subcommand)");
      emit(to_json(eval_bounds(parse_n(n_text), eps, bound_m)), manifest);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const OracleLimits limits = raise_caps ? OracleLimits::raised() : OracleLimits{};
      manifest.caps = {{"raised", raise_caps},
                       {"max_set_size", limits.max_set_size},
                       {"max_group_order", limits.max_group_order},
                       {"max_bipartite_side", limits.max_bipartite_side},
                       {"max_fiber_order", limits.max_fiber_order},
                       {"max_orbit_order", limits.max_orbit_order}};
      if (*o_group)
        req.group = v_group;
      if (*o_set)
        req.set = v_set;
      if (*o_core)
        req.core = v_core;
      if (*o_h)
        req.h = v_h;
      if (*o_kset)
        req.k_set = v_kset;
      if (*o_k)
        req.k = v_k;
      if (*o_degree)
        req.degree = v_degree;
      if (all)
        ids = oracle_ids();
      if (ids.empty())
        throw ParseError("verify needs lemma ids or --all");
      bool ok = true;
      for (const auto & id : ids)
        for (const auto & r : run_oracle(id, all ? OracleRequest{} : req, limits)) {
          ok = ok && r.pass;
          emit(to_json(r), manifest);
        }
      return ok ? 0 : 1;
    }
  } catch (const CapExceeded & e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
