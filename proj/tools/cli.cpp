#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "lazyburn/bounds.hpp"
#include "lazyburn/burn.hpp"
#include "lazyburn/cmatch.hpp"
#include "lazyburn/force.hpp"
#include "lazyburn/generate.hpp"
#include "lazyburn/io.hpp"
#include "lazyburn/serialize.hpp"
#include "lazyburn/solve.hpp"
#include "lazyburn/transform.hpp"

namespace lazyburn::cli {
namespace {

namespace fs = std::filesystem;

/// Thrown for bad flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool original = false;
  bool json = false;
  std::string set;
  bool set_given = false;
  unsigned workers = 1;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  std::int64_t max_time_ms = SearchLimits{}.max_time.count();
  bool no_core = false;
  std::string to;
  std::string format;
  bool skew = false;
  bool exact = false;
  std::size_t force_limit = default_forcing_limit;
  std::string family;
  std::uint64_t seed = 0;
  bool greedy = false;
  std::size_t certified_m = 0;
  bool certified_given = false;
};

bool is_json_path(const std::string& path) { return fs::path(path).extension() == ".json"; }

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return is_json_path(path) ? hypergraph_from_json(load_json(path)) : read_hg(path);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph load_graph(const std::string& path) {
  try {
    return is_json_path(path) ? graph_from_json(load_json(path)) : read_gr(path);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
}

Model model_of(const Options& o) { return o.original ? Model::original : Model::spontaneous; }

SearchLimits limits_of(const Options& o) {
  SearchLimits limits;
  limits.workers = std::max(1u, o.workers);
  limits.max_nodes = o.max_nodes;
  limits.max_time = std::chrono::milliseconds(o.max_time_ms);
  limits.use_core_reduction = !o.no_core;
  return limits;
}

VertexSet seed_of(const Options& o, std::size_t n) {
  VertexSet s;
  try {
    s = parse_vertex_list(o.set);
    s.check_range(n, "--set");
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return s;
}

std::string join(const VertexSet& s) { return format_vertex_list(s, " "); }

std::string format_chron(const ChronList& list) {
  std::ostringstream os;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) os << ' ';
    os << 'e' << list[i].edge << "->" << list[i].vertex;
  }
  return os.str();
}

std::string format_edge(std::span<const Vertex> e, const std::vector<Vertex>& map) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << map[e[i]];
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- solve

int cmd_solve(const Options& o, std::ostream& out) {
  auto h = load_hypergraph(o.file);
  auto r = b_lazy(h, model_of(o), limits_of(o));
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "b_L: " << r.value << '\n'
        << "witness: " << join(r.witness) << '\n'
        << "certificate: " << format_chron(r.certificate) << '\n'
        << "optimal: " << (r.optimal ? "yes" : "no") << '\n'
        << "model: " << to_string(r.model) << '\n';
  }
  return r.optimal ? ok : limit_exceeded;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
  auto h = load_hypergraph(o.file);
  auto seed = seed_of(o, h.num_vertices());
  auto trace = propagate(h, seed, model_of(o));
  if (o.json) {
    Json j{{"burning_set", trace.complete}, {"model", to_string(model_of(o))}, {"trace", to_json(trace)}};
    out << j.dump(2) << '\n';
  } else {
    out << "burning set: " << (trace.complete ? "yes" : "no") << '\n';
    out << "seed: " << join(trace.seed) << '\n';
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      out << "round " << i + 1 << ": " << join(trace.rounds[i]) << '\n';
    }
    out << "burned: " << join(trace.burned) << '\n';
    if (trace.complete) out << "chronological list: " << format_chron(trace.chron) << '\n';
  }
  return trace.complete ? ok : verification_false;
}

// ---------------------------------------------------------------- core

int cmd_core(const Options& o, std::ostream& out) {
  auto h = load_hypergraph(o.file);
  auto c = core(h);
  if (o.json) {
    out << to_json(c).dump(2) << '\n';
    return ok;
  }
  // Removals are printed in peeling order, each with the edge that peeled it.
  out << "removals:";
  for (Vertex v : c.removals) out << ' ' << v;
  out << "\npeeled by:";
  for (EdgeId e : c.removal_edges) out << " e" << e;
  out << '\n';
  out << "core vertices: " << join(VertexSet(c.core.vertex_map)) << '\n';
  out << "core edges:";
  for (EdgeId e = 0; e < c.core.graph.num_edges(); ++e) {
    out << ' ' << format_edge(c.core.graph.edge(e), c.core.vertex_map);
  }
  out << '\n';
  return ok;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const Options& o, std::ostream& out) {
  auto h = load_hypergraph(o.file);
  BoundReportOptions opts;
  opts.include_greedy = o.greedy;
  if (o.certified_given) {
    if (o.certified_m > h.num_vertices()) throw UsageError("--certified-m exceeds n");
    opts.certified_m = o.certified_m;
  }
  auto report = bound_report(h, opts);
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
    return ok;
  }
  std::size_t width = 0;
  for (const auto& e : report.entries) width = std::max(width, e.name.size());
  for (const auto& e : report.entries) {
    out << e.name << std::string(width + 2 - e.name.size(), ' ')
        << (e.kind == BoundKind::lower ? "lower  " : "upper  ");
    if (e.applicable) {
      out << e.value;
    } else {
      out << "n/a";
    }
    if (!e.note.empty()) out << "  (" << e.note << ')';
    out << '\n';
  }
  out << "best_lower: " << report.best_lower << '\n' << "best_upper: " << report.best_upper << '\n';
  return ok;
}

// ---------------------------------------------------------------- transform

void emit_hypergraph(const Hypergraph& h, const std::string& format, std::ostream& out) {
  if (format.empty() || format == "hg") {
    out << format_hg(h);
  } else if (format == "json") {
    out << to_json(h).dump() << '\n';
  } else if (format == "dot") {
    out << format_incidence_dot(h);
  } else {
    throw UsageError("format '" + format + "' does not apply to a hypergraph");
  }
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format.empty() || format == "gr") {
    out << format_gr(g);
  } else if (format == "json") {
    out << to_json(g).dump() << '\n';
  } else if (format == "dot") {
    out << format_dot(g);
  } else {
    throw UsageError("format '" + format + "' does not apply to a graph");
  }
}

int cmd_transform(const Options& o, std::ostream& out) {
  if (o.to == "dual") {
    emit_hypergraph(dual(load_hypergraph(o.file)), o.format, out);
  } else if (o.to == "ig") {
    auto h = load_hypergraph(o.file);
    if (o.format == "dot") {
      out << format_incidence_dot(h);
    } else {
      emit_graph(incidence_graph(h), o.format, out);
    }
  } else if (o.to == "ng") {
    emit_hypergraph(open_neighborhood_hypergraph(load_graph(o.file)), o.format, out);
  } else if (o.to == "ncg") {
    emit_hypergraph(closed_neighborhood_hypergraph(load_graph(o.file)), o.format, out);
  } else {
    emit_graph(triangle_gluing(load_graph(o.file)), o.format, out);
  }
  return ok;
}

// ---------------------------------------------------------------- force

int cmd_force(const Options& o, std::ostream& out) {
  auto g = load_graph(o.file);
  const auto rule = o.skew ? ForcingRule::skew : ForcingRule::standard;
  if (o.exact) {
    auto z = forcing_number(g, rule, o.force_limit);
    if (o.json) {
      out << to_json(z).dump(2) << '\n';
    } else {
      out << (o.skew ? "z0: " : "z: ") << z.value << '\n' << "witness: " << join(z.witness) << '\n';
    }
    return ok;
  }
  auto trace = run_forcing(g, seed_of(o, g.num_vertices()), rule);
  if (o.json) {
    out << to_json(trace).dump(2) << '\n';
  } else {
    out << "forcing set: " << (trace.complete ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      out << "round " << i + 1 << ':';
      for (auto [u, v] : trace.rounds[i]) out << ' ' << u << "->" << v;
      out << '\n';
    }
    out << "black: " << join(trace.black) << '\n';
  }
  return trace.complete ? ok : verification_false;
}

// ---------------------------------------------------------------- gen

std::vector<std::uint64_t> family_args(const std::string& text, std::size_t count,
                                       const std::string& family) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      if (item.empty() || item[0] == '-') throw std::invalid_argument(item);
      values.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in --family " + family);
    }
  }
  if (values.size() != count) {
    throw UsageError("--family " + family + " takes " + std::to_string(count) + " parameters");
  }
  return values;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto colon = o.family.find(':');
  if (colon == std::string::npos) throw UsageError("--family must look like name:params");
  const std::string name = o.family.substr(0, colon);
  const std::string params = o.family.substr(colon + 1);
  Hypergraph h;
  try {
    if (name == "star") {
      auto p = family_args(params, 2, name);
      h = gen_star_hypergraph(static_cast<int>(p[0]), static_cast<int>(p[1]));
    } else if (name == "latin") {
      auto p = family_args(params, 1, name);
      h = gen_latin_square_hypergraph(static_cast<int>(p[0]));
    } else if (name == "random") {
      auto p = family_args(params, 4, name);
      h = gen_random_hypergraph(p[0], p[1], p[2], p[3], o.seed);
    } else {
      throw UsageError("unknown family '" + name + "' (expected star, latin or random)");
    }
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  out << format_hg(h);
  return ok;
}

// ---------------------------------------------------------------- xcheck

enum class Status { pass, fail, skip };

struct CheckRow {
  std::string name;
  Status status;
  std::string detail;
};

constexpr std::size_t xcheck_forcing_vertices = 20;

std::vector<VertexSet> sample_sets(std::size_t n) {
  std::vector<VertexSet> out;
  if (n <= 10) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) ids.push_back(v);
      }
      out.emplace_back(std::move(ids));
    }
    return out;
  }
  Rng rng(0);
  for (int i = 0; i < 64; ++i) {
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.below(2)) ids.push_back(v);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

class Checker {
 public:
  void run(const std::string& name, const std::function<CheckRow()>& body) {
    try {
      rows_.push_back(body());
    } catch (const SizeLimitExceeded& e) {
      rows_.push_back({name, Status::skip, e.what()});
    }
    rows_.back().name = name;
  }
  void skip(const std::string& name, const std::string& why) { rows_.push_back({name, Status::skip, why}); }

  const std::vector<CheckRow>& rows() const { return rows_; }
  bool all_passed() const {
    return std::none_of(rows_.begin(), rows_.end(), [](const CheckRow& r) { return r.status == Status::fail; });
  }

 private:
  std::vector<CheckRow> rows_;
};

CheckRow verdict(bool ok_, std::string detail) {
  return {"", ok_ ? Status::pass : Status::fail, std::move(detail)};
}

std::string eq(const char* lhs, long a, const char* rhs, long b) {
  return std::string(lhs) + "=" + std::to_string(a) + " " + rhs + "=" + std::to_string(b);
}

void graph_checks(const Graph& g, const std::string& label, Checker& c) {
  const std::size_t n = g.num_vertices();
  if (n > xcheck_forcing_vertices) {
    for (const char* name : {"skew-forcing/open-neighbourhood", "closed-neighbourhood<=z",
                             "triangle-gluing"}) {
      c.skip(name, label + " has more than " + std::to_string(xcheck_forcing_vertices) + " vertices");
    }
    return;
  }
  c.run("skew-forcing/open-neighbourhood", [&] {
    auto nh = open_neighborhood_hypergraph(g);
    bool sets_agree = true;
    for (const auto& b : sample_sets(n)) {
      sets_agree = sets_agree &&
                   skew_zero_force(g, b).complete == is_lazy_burning_set(nh, b, Model::spontaneous);
    }
    const auto z0 = static_cast<long>(z0_exact(g, xcheck_forcing_vertices).value);
    const auto bl = static_cast<long>(b_lazy(nh, Model::spontaneous).value);
    return verdict(sets_agree && z0 == bl, eq("z0(G)", z0, "b_L(N(G))", bl));
  });
  c.run("closed-neighbourhood<=z", [&] {
    const auto z = static_cast<long>(z_exact(g, xcheck_forcing_vertices).value);
    const auto bl = static_cast<long>(b_lazy(closed_neighborhood_hypergraph(g), Model::spontaneous).value);
    return verdict(bl <= z, eq("b_L(N[G])", bl, "z(G)", z));
  });
  if (3 * n > 27) {
    c.skip("triangle-gluing", "T(G) has more than 27 vertices");
    return;
  }
  c.run("triangle-gluing", [&] {
    auto t = triangle_gluing(g);
    bool sets_agree = true;
    for (const auto& b : sample_sets(n)) {
      sets_agree = sets_agree &&
                   zero_force(g, b).complete == skew_zero_force(t, lift_to_triangle_layer(b)).complete;
    }
    const auto z = static_cast<long>(z_exact(g, 27).value);
    const auto z0 = static_cast<long>(z0_exact(t, 27).value);
    return verdict(sets_agree && z == z0, eq("z(G)", z, "z0(T(G))", z0));
  });
}

void hypergraph_checks(const Hypergraph& h, Checker& c) {
  const std::size_t n = h.num_vertices();
  const long ln = static_cast<long>(n);
  const long lm = static_cast<long>(h.num_edges());

  c.run("propagation/degeneracy", [&] {
    std::size_t tested = 0;
    bool agree = true;
    for (const auto& b : sample_sets(n)) {
      for (Model model : {Model::spontaneous, Model::original}) {
        agree = agree && propagate(h, b, model).complete == is_lazy_burning_set(h, b, model);
        ++tested;
      }
    }
    return verdict(agree, std::to_string(tested) + " seed sets");
  });

  std::optional<SolveResult> solved;
  c.run("solver-certificate", [&] {
    solved = b_lazy(h, Model::spontaneous);
    bool good = solved->optimal && is_lazy_burning_set(h, solved->witness, Model::spontaneous) &&
                !find_chron_violation(h, solved->witness, solved->certificate).has_value() &&
                solved->certificate.size() == n - solved->value;
    return verdict(good, "b_L=" + std::to_string(solved->value));
  });
  if (!solved || !solved->optimal) {
    for (const char* name : {"chron<->C-matching", "max-C-matching", "dual-identity", "retrograde",
                             "core-invariance", "original-model-on-core", "monotonicity",
                             "incidence-forcing", "skew-forcing/incidence-graph"}) {
      c.skip(name, "no exact lazy burning number");
    }
    return;
  }
  const long bl = static_cast<long>(solved->value);

  c.run("chron<->C-matching", [&] {
    auto m = cmatching_from_chron(h, solved->witness, solved->certificate);
    auto back = chron_from_cmatching(h, m);
    return verdict(validate_cmatching(h, m) && back.seed == solved->witness &&
                       back.list == solved->certificate,
                   "length " + std::to_string(m.size()));
  });
  CMatching best;
  c.run("max-C-matching", [&] {
    best = max_cmatching(h);
    const long size = static_cast<long>(best.size());
    return verdict(validate_cmatching(h, best) && size == ln - bl, eq("m(H)", size, "n-b_L", ln - bl));
  });
  c.run("dual-identity", [&] {
    const long bd = static_cast<long>(b_lazy(dual(h), Model::spontaneous).value);
    return verdict(bd == lm - ln + bl, eq("b_L(H*)", bd, "m-n+b_L(H)", lm - ln + bl));
  });
  c.run("retrograde", [&] {
    auto r = retrograde(h, best);
    return verdict(validate_cmatching(dual(h), r) && r.size() == best.size(),
                   "size " + std::to_string(r.size()));
  });
  auto cr = core(h);
  c.run("core-invariance", [&] {
    const long bc = static_cast<long>(b_lazy(cr.core.graph, Model::spontaneous).value);
    const bool idempotent = core(cr.core.graph).removals.empty();
    return verdict(bc == bl && idempotent, eq("b_L(core)", bc, "b_L(H)", bl));
  });
  c.run("original-model-on-core", [&] {
    const long bo = static_cast<long>(b_lazy(cr.core.graph, Model::original).value);
    return verdict(bo == bl, eq("b_L^o(core)", bo, "b_L(H)", bl));
  });
  c.run("monotonicity", [&] {
    bool good = true;
    const std::size_t probes = std::min<std::size_t>(n, 8);
    for (Vertex v = 0; v < probes; ++v) {
      const long without = static_cast<long>(
          b_lazy(remove_vertices(h, VertexSet{v}).graph, Model::spontaneous).value);
      good = good && bl - 1 <= without && without <= bl;
    }
    return verdict(good, std::to_string(probes) + " vertices removed");
  });
  c.run("incidence-forcing", [&] {
    auto ig = incidence_graph(h);
    bool agree = true;
    for (const auto& b : sample_sets(n)) {
      auto seed = b;
      for (EdgeId e = 0; e < h.num_edges(); ++e) seed.insert(static_cast<Vertex>(n + e));
      agree = agree && zero_force(ig, seed).complete == is_lazy_burning_set(h, b, Model::spontaneous);
    }
    return verdict(agree, "B burns H iff B plus all edge nodes forces IG(H)");
  });
  if (n + h.num_edges() > xcheck_forcing_vertices) {
    c.skip("skew-forcing/incidence-graph",
           "IG(H) has more than " + std::to_string(xcheck_forcing_vertices) + " vertices");
  } else {
    c.run("skew-forcing/incidence-graph", [&] {
      const long z0 = static_cast<long>(z0_exact(incidence_graph(h), xcheck_forcing_vertices).value);
      return verdict(z0 == 2 * bl + lm - ln, eq("z0(IG(H))", z0, "2b_L+m-n", 2 * bl + lm - ln));
    });
  }
}

int cmd_xcheck(const Options& o, std::ostream& out) {
  Checker checker;
  const bool graph_input = fs::path(o.file).extension() == ".gr";
  if (graph_input) {
    graph_checks(load_graph(o.file), "G", checker);
  } else {
    auto h = load_hypergraph(o.file);
    hypergraph_checks(h, checker);
    graph_checks(incidence_graph(h), "IG(H)", checker);
  }
  auto status_name = [](Status s) {
    return s == Status::pass ? "PASS" : s == Status::fail ? "FAIL" : "SKIP";
  };
  if (o.json) {
    Json rows = Json::array();
    for (const auto& r : checker.rows()) {
      rows.push_back({{"check", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
    }
    out << Json{{"checks", rows}, {"passed", checker.all_passed()}}.dump(2) << '\n';
  } else {
    std::size_t width = 5;
    for (const auto& r : checker.rows()) width = std::max(width, r.name.size());
    out << "status  " << "check" << std::string(width - 5 + 2, ' ') << "detail\n";
    for (const auto& r : checker.rows()) {
      out << status_name(r.status) << "    " << r.name << std::string(width - r.name.size() + 2, ' ')
          << r.detail << '\n';
    }
  }
  return checker.all_passed() ? ok : verification_false;
}

// ---------------------------------------------------------------- wiring

void add_limits(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "Branch-and-bound threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--max-nodes", o.max_nodes, "Search node budget");
  cmd->add_option("--max-time-ms", o.max_time_ms, "Search time budget in milliseconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-core", o.no_core, "Search without the core reduction");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lazy burning on hypergraphs: exact solver, bounds, cores, C-matchings and forcing",
               "lazyburn"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Exact lazy burning number with witness and certificate");
  solve->add_option("FILE", o.file, "Hypergraph (.hg or .json)")->required();
  solve->add_flag("--no-spontaneous", o.original, "Singleton edges do not burn on their own");
  solve->add_flag("--json", o.json, "JSON output");
  add_limits(solve, o);

  auto* verify = app.add_subcommand("verify", "Check whether a seed set burns the hypergraph");
  verify->add_option("FILE", o.file, "Hypergraph (.hg or .json)")->required();
  verify->add_option("--set", o.set, "Comma-separated vertex ids")->required();
  verify->add_flag("--no-spontaneous", o.original, "Singleton edges do not burn on their own");
  verify->add_flag("--json", o.json, "JSON output");

  auto* core_cmd = app.add_subcommand("core", "Core of the hypergraph and the peeling order");
  core_cmd->add_option("FILE", o.file, "Hypergraph (.hg or .json)")->required();
  core_cmd->add_flag("--json", o.json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds on the lazy burning number");
  bounds->add_option("FILE", o.file, "Hypergraph (.hg or .json)")->required();
  bounds->add_flag("--json", o.json, "JSON output");
  bounds->add_flag("--greedy", o.greedy, "Include the greedy upper bound");
  bounds->add_option("--certified-m", o.certified_m,
                     "Known maximum C-matching size; enables the intersection bound for t > 1");

  auto* transform = app.add_subcommand("transform", "Derived structures");
  transform->add_option("FILE", o.file, "Input (.hg for dual/ig, .gr for ng/ncg/triangle)")->required();
  transform->add_option("--to", o.to, "Target structure")
      ->required()
      ->check(CLI::IsMember({"dual", "ig", "ng", "ncg", "triangle"}));
  transform->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"hg", "gr", "json", "dot"}));

  auto* force = app.add_subcommand("force", "Zero forcing and skew zero forcing on graphs");
  force->add_option("FILE", o.file, "Graph (.gr or .json)")->required();
  auto* set_opt = force->add_option("--set", o.set, "Initially black vertices");
  auto* exact_opt = force->add_flag("--exact", o.exact, "Compute z (or z0 with --skew) exactly");
  set_opt->excludes(exact_opt);
  force->add_flag("--skew", o.skew, "Skew forcing: white vertices force too");
  force->add_flag("--json", o.json, "JSON output");
  force->add_option("--limit", o.force_limit, "Largest graph accepted by --exact")
      ->check(CLI::Range(0, 64));

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph in .hg format");
  gen->add_option("--family", o.family, "star:k,l | latin:n | random:n,m,smin,smax")->required();
  gen->add_option("--seed", o.seed, "Random seed");

  auto* xcheck = app.add_subcommand("xcheck", "Cross-check the equivalent characterisations on one instance");
  xcheck->add_option("FILE", o.file, "Hypergraph (.hg/.json) or graph (.gr)")->required();
  xcheck->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  o.set_given = set_opt->count() > 0;
  o.certified_given = bounds->count("--certified-m") > 0;

  try {
    if (*solve) return cmd_solve(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*core_cmd) return cmd_core(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*force) {
      if (!o.exact && !o.set_given) throw UsageError("force needs --set or --exact");
      return cmd_force(o, out);
    }
    if (*gen) return cmd_gen(o, out);
    if (*xcheck) return cmd_xcheck(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << o.file << ": " << e.what() << '\n';
    return parse_failure;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return limit_exceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace lazyburn::cli
