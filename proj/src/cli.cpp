#include "fractaloid/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fractaloid/error.hpp"
#include "fractaloid/fractality.hpp"
#include "fractaloid/graph.hpp"
#include "fractaloid/graph_io.hpp"
#include "fractaloid/groupoid.hpp"
#include "fractaloid/isomorphism.hpp"
#include "fractaloid/labeling.hpp"
#include "fractaloid/lattice.hpp"
#include "fractaloid/moments.hpp"
#include "fractaloid/truncated_operator.hpp"

namespace fractaloid::cli {

namespace {

namespace fs = std::filesystem;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json payload;
  std::optional<Table> table;
  std::vector<std::string> warnings;
};

struct CommonOptions {
  std::string format = "json";
  std::string out;
  std::size_t max_states = kDefaultMaxStates;
  std::uint64_t max_paths = kDefaultPathBudget;
};

// Thrown for semantic usage problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json pair_json(const FractalPair& p) {
  Json j = Json::array();
  j.push_back(p.n_zero);
  if (p.n_sup.is_infinite())
    j.push_back("inf");
  else
    j.push_back(p.n_sup.value());
  return j;
}

Json count_json(const std::optional<Count>& c) {
  return c ? Json(to_decimal(*c)) : Json(nullptr);
}

Json moment_json(const std::string& graph, const MomentVector& m) {
  Json j;
  j["graph"] = graph;
  j["n"] = m.n;
  Json per_vertex = Json::object();
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    per_vertex[m.vertices[i]] = to_decimal(m.values[i]);
  j["per_vertex"] = std::move(per_vertex);
  j["scalar"] = count_json(is_scalar(m));
  return j;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_text(std::ostream& os, const Outcome& o) {
  if (o.table) {
    std::vector<std::size_t> width(o.table->header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    };
    widen(o.table->header);
    for (const auto& r : o.table->rows) widen(r);
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << "  ";
        os << std::setw(static_cast<int>(width[i])) << row[i];
      }
      os << '\n';
    };
    line(o.table->header);
    for (const auto& r : o.table->rows) line(r);
  } else {
    for (const auto& [key, value] : o.payload.items()) os << key << ": " << cell(value) << '\n';
  }
  for (const auto& w : o.warnings) os << "warning: " << w << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& os, const Outcome& o) {
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  };
  if (o.table) {
    line(o.table->header);
    for (const auto& r : o.table->rows) line(r);
  } else {
    line({"key", "value"});
    for (const auto& [key, value] : o.payload.items()) line({key, cell(value)});
  }
}

void emit(const std::string& command, const Outcome& o, const CommonOptions& opts,
          std::ostream& out) {
  std::ostringstream buffer;
  if (opts.format == "json") {
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command;
    report["payload"] = o.payload;
    report["warnings"] = o.warnings;
    buffer << report.dump(2) << '\n';
  } else if (opts.format == "csv") {
    write_csv(buffer, o);
  } else {
    write_text(buffer, o);
  }
  if (opts.out.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + opts.out + "'");
  file << buffer.str();
}

MomentOptions moment_options(const CommonOptions& opts) { return {opts.max_states}; }

// --- subcommands -----------------------------------------------------------

Outcome cmd_info(const DirectedGraph& g) {
  Outcome o;
  o.payload["graph"] = g.name();
  o.payload["vertices"] = g.vertex_count();
  o.payload["edges"] = g.edge_count();
  o.payload["connected"] = is_connected(g);
  o.payload["max_out_degree"] = g.empty() ? Json(nullptr) : Json(max_out_degree(g));
  Json degs = Json::array();
  Table t{{"vertex", "out", "in", "total"}, {}};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto d = degrees(g, v);
    Json row;
    row["vertex"] = g.vertex_name(v);
    row["out"] = d.out;
    row["in"] = d.in;
    row["total"] = d.total;
    degs.push_back(std::move(row));
    t.rows.push_back({g.vertex_name(v), std::to_string(d.out), std::to_string(d.in),
                      std::to_string(d.total)});
  }
  o.payload["degrees"] = std::move(degs);
  Json blocks = Json::object();
  for (const auto& e : g.edges()) blocks[e.id] = std::string(to_string(edge_block_type(e)));
  o.payload["edge_blocks"] = std::move(blocks);
  o.table = std::move(t);
  return o;
}

Outcome cmd_check(const DirectedGraph& g) {
  Outcome o;
  const auto reason = non_fractal_reason(g);
  o.payload["fractal"] = !reason.has_value();
  o.payload["pair"] = reason ? Json(nullptr) : pair_json(fractal_pair(g));
  if (reason) o.payload["reason"] = *reason;
  return o;
}

Outcome cmd_pair(const DirectedGraph& g) {
  Outcome o;
  o.payload["graph"] = g.name();
  o.payload["pair"] = pair_json(fractal_pair(g));
  return o;
}

Outcome cmd_moments(const DirectedGraph& g, std::size_t max_n, const std::string& root,
                    const CommonOptions& opts) {
  Outcome o;
  o.payload["graph"] = g.name();
  Json list = Json::array();
  Table t;
  t.header.push_back("n");
  std::vector<VertexIndex> vertices;
  if (root.empty()) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  } else {
    vertices.push_back(g.vertex(root));
  }
  for (auto v : vertices) t.header.push_back(g.vertex_name(v));
  t.header.push_back("scalar");

  const ShadowedGraph sg(g);
  for (std::size_t n = 1; n <= max_n; ++n) {
    MomentVector m;
    m.n = n;
    for (auto v : vertices) {
      m.vertices.push_back(g.vertex_name(v));
      m.values.push_back(radial_moment_at(sg, v, n, moment_options(opts)));
    }
    Json j = moment_json(g.name(), m);
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : m.values) row.push_back(to_decimal(c));
    row.push_back(j["scalar"].is_null() ? "null" : j["scalar"].get<std::string>());
    t.rows.push_back(std::move(row));
    list.push_back(std::move(j));
  }
  o.payload["moments"] = std::move(list);
  o.table = std::move(t);
  return o;
}

Outcome cmd_lattice(std::size_t n_max, std::size_t max_len, const std::string& method,
                    const CommonOptions& opts) {
  Outcome o;
  const bool all = method.empty();
  Json rows = Json::array();
  Table t{{"N", "n", "brute", "recurrence", "closed_form"}, {}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::optional<Count> brute, recurrence, closed;
    if (all || method == "brute")
      brute = count_axis_paths_bruteforce(n_max, n, opts.max_paths).axis_paths;
    if (all || method == "recurrence") recurrence = count_axis_paths_recurrence(n_max, n);
    if ((all || method == "closed") && (n_max == 1 || n_max == 2))
      closed = closed_form_count(n_max, n);
    Json row;
    row["N"] = n_max;
    row["n"] = n;
    row["brute"] = count_json(brute);
    row["recurrence"] = count_json(recurrence);
    row["closed_form"] = count_json(closed);
    t.rows.push_back({std::to_string(n_max), std::to_string(n), cell(row["brute"]),
                      cell(row["recurrence"]), cell(row["closed_form"])});
    rows.push_back(std::move(row));
  }
  if (method == "closed" && n_max > 2)
    o.warnings.push_back("no closed form is known for N = " + std::to_string(n_max));
  o.payload["rows"] = std::move(rows);
  o.table = std::move(t);
  return o;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

Outcome cmd_classify(const std::vector<std::string>& inputs) {
  std::vector<DirectedGraph> graphs;
  std::vector<Classification::Reject> load_failures;
  for (const auto& path : expand_inputs(inputs)) {
    try {
      graphs.push_back(load_graph(path));
    } catch (const StructuralError& e) {
      load_failures.push_back({path.string(), std::string("invalid graph: ") + e.what()});
    }
  }
  auto result = classify(graphs);
  result.rejected.insert(result.rejected.end(), load_failures.begin(), load_failures.end());

  Outcome o;
  Json classes = Json::array();
  Table t{{"pair", "graph"}, {}};
  for (const auto& bucket : result.classes) {
    Json c;
    c["pair"] = pair_json(bucket.key.pair);
    c["graphs"] = bucket.graphs;
    for (const auto& name : bucket.graphs) t.rows.push_back({bucket.key.pair.str(), name});
    classes.push_back(std::move(c));
  }
  Json rejected = Json::array();
  for (const auto& r : result.rejected) {
    Json j;
    j["graph"] = r.graph;
    j["reason"] = r.reason;
    t.rows.push_back({"rejected", r.graph});
    rejected.push_back(std::move(j));
  }
  o.payload["classes"] = std::move(classes);
  o.payload["rejected"] = std::move(rejected);
  o.table = std::move(t);
  return o;
}

Outcome cmd_compare(const DirectedGraph& g1, const DirectedGraph& g2, std::size_t max_n,
                    const CommonOptions& opts) {
  Outcome o;
  o.payload["graphs"] = {g1.name(), g2.name()};
  o.payload["isomorphic"] = graph_isomorphic(g1, g2).has_value();
  Json pairs = Json::array();
  std::optional<FractalPair> p1, p2;
  if (!non_fractal_reason(g1)) p1 = fractal_pair(g1);
  if (!non_fractal_reason(g2)) p2 = fractal_pair(g2);
  pairs.push_back(p1 ? pair_json(*p1) : Json(nullptr));
  pairs.push_back(p2 ? pair_json(*p2) : Json(nullptr));
  o.payload["pairs"] = std::move(pairs);
  o.payload["same_class"] = p1 && p2 && *p1 == *p2;
  o.payload["max_n"] = max_n;
  o.payload["identically_distributed"] =
      identically_distributed(g1, g2, max_n, moment_options(opts));
  return o;
}

Json tree_json(const DirectedGraph& g, const VertexTree& t, std::size_t target) {
  Json j;
  j["root"] = g.vertex_name(t.root);
  j["nodes"] = t.nodes.size();
  j["levels"] = t.level_sizes();
  j["regular"] = tree_regular_to_depth(t, target);
  return j;
}

Outcome cmd_tree(const DirectedGraph& g, const std::string& root, std::size_t depth) {
  Outcome o;
  const std::size_t target = 2 * max_out_degree(g);
  o.payload["graph"] = g.name();
  o.payload["depth"] = depth;
  o.payload["branching"] = target;
  Table t{{"root", "nodes", "regular"}, {}};
  Json trees = Json::array();
  std::vector<VertexTree> built;
  std::vector<VertexIndex> roots;
  if (root.empty()) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) roots.push_back(v);
  } else {
    roots.push_back(g.vertex(root));
  }
  for (auto v : roots) {
    built.push_back(vertex_tree(g, v, depth));
    Json j = tree_json(g, built.back(), target);
    t.rows.push_back({g.vertex_name(v), std::to_string(built.back().nodes.size()),
                      j["regular"].get<bool>() ? "true" : "false"});
    trees.push_back(std::move(j));
  }
  // group roots whose trees are isomorphic, first-seen order
  Json classes = Json::array();
  std::vector<bool> placed(built.size(), false);
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (placed[i]) continue;
    Json group = Json::array();
    for (std::size_t k = i; k < built.size(); ++k) {
      if (!placed[k] && tree_isomorphic(built[i], built[k])) {
        placed[k] = true;
        group.push_back(g.vertex_name(roots[k]));
      }
    }
    classes.push_back(std::move(group));
  }
  o.payload["trees"] = std::move(trees);
  o.payload["isomorphism_classes"] = std::move(classes);
  o.table = std::move(t);
  return o;
}

Outcome cmd_label(const DirectedGraph& g) {
  const auto lab = canonical_labeling(g);
  Outcome o;
  o.payload["N"] = lab.degree_bound();
  Json labels = Json::object();
  Table t{{"edge", "label"}, {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    labels[g.edge(e).id] = lab.label(e);
    t.rows.push_back({g.edge(e).id, std::to_string(lab.label(e))});
  }
  o.payload["labels"] = std::move(labels);
  o.table = std::move(t);
  return o;
}

Outcome cmd_matrix(const DirectedGraph& g, std::size_t depth, std::size_t max_n) {
  const auto op = truncated_radial_matrix(g, depth);
  Outcome o;
  o.payload["graph"] = g.name();
  o.payload["depth"] = depth;
  o.payload["basis_size"] = op.basis().size();
  o.payload["nonzeros"] = op.matrix().nonZeros();
  o.payload["symmetric"] = op.is_symmetric();
  Json diagonal = Json::array();
  Table t{{"n"}, {}};
  for (const auto& v : g.vertices()) t.header.push_back(v);
  t.header.push_back("scalar");
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto m = op.vertex_diagonal(n);
    Json j = moment_json(g.name(), m);
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : m.values) row.push_back(to_decimal(c));
    row.push_back(cell(j["scalar"]));
    t.rows.push_back(std::move(row));
    diagonal.push_back(std::move(j));
  }
  if (max_n > depth)
    o.warnings.push_back("diagonal entries for n > depth may undercount (truncated basis)");
  o.payload["diagonal"] = std::move(diagonal);
  o.table = std::move(t);
  return o;
}

Outcome cmd_verify(const DirectedGraph& g, std::size_t max_n, const CommonOptions& opts) {
  const auto report = verify_moment_theorem(g, max_n, moment_options(opts));
  Outcome o;
  o.payload["graph"] = report.graph;
  o.payload["N"] = report.degree;
  Json rows = Json::array();
  Table t{{"n", "walk", "tree", "lattice", "a_eq_b", "a_eq_c", "b_eq_c"}, {}};
  for (const auto& r : report.rows) {
    Json j;
    j["graph"] = report.graph;
    j["n"] = r.n;
    j["scalar"] = count_json(r.walk);
    j["tree"] = to_decimal(r.tree);
    j["lattice"] = to_decimal(r.lattice);
    j["a_eq_b"] = r.a_eq_b;
    j["a_eq_c"] = r.a_eq_c;
    j["b_eq_c"] = r.b_eq_c;
    t.rows.push_back({std::to_string(r.n), cell(j["scalar"]), cell(j["tree"]),
                      cell(j["lattice"]), r.a_eq_b ? "true" : "false",
                      r.a_eq_c ? "true" : "false", r.b_eq_c ? "true" : "false"});
    rows.push_back(std::move(j));
  }
  o.payload["rows"] = std::move(rows);
  o.table = std::move(t);
  if (std::any_of(report.rows.begin(), report.rows.end(),
                  [](const auto& r) { return !r.a_eq_c; }))
    o.warnings.push_back("walk moments differ from the lattice-path count for some n");
  return o;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const LimitError*>(&e)) return kLimitExceeded;
  if (dynamic_cast<const ParameterError*>(&e)) return kUsage;
  return kInvalidGraph;
}

void report_error(const std::string& command, const std::string& kind, const std::string& message,
                  int code, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  err << "fractaloid " << command << ": " << message << '\n';
  if (opts.format != "json") return;
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  out << report.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph groupoids, fractality and radial operator moments", "fractaloid"};
  app.require_subcommand(1);

  CommonOptions opts;
  if (const char* env = std::getenv("FRACTALOID_MAX_STATES")) {
    try {
      opts.max_states = std::stoull(env);
    } catch (const std::exception&) {
      err << "fractaloid: ignoring malformed FRACTALOID_MAX_STATES='" << env << "'\n";
    }
  }

  std::string family_arg, name_arg, root, method;
  std::size_t gen_n = 0, regularize_k = 1, glue_loops = 0;
  std::optional<std::size_t> max_n, depth;
  std::size_t lattice_n = 1;
  std::string graph_path, second_path;
  std::vector<std::string> inputs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", opts.out, "Write the report to PATH");
    sub->add_option("--max-states", opts.max_states, "Cap on moment DP states")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph from a named family");
  gen->add_option("--family", family_arg, "loops|circulant|complete|path|tree")
      ->required()
      ->check(CLI::IsMember({"loops", "circulant", "complete", "path", "tree"}));
  gen->add_option("--n", gen_n, "Family parameter")->required()->check(CLI::Range(1, 1000));
  gen->add_option("--regularize", regularize_k, "Replace every edge by k parallel copies")
      ->check(CLI::Range(1, 1000));
  gen->add_option("--glue-loops", glue_loops, "Attach this many loops at every vertex")
      ->check(CLI::Range(0, 1000));
  gen->add_option("--name", name_arg, "Override the graph name");
  gen->add_option("--out", opts.out, "Write the graph to PATH");

  auto* info = app.add_subcommand("info", "Vertex degrees and edge blocks");
  auto* check = app.add_subcommand("check", "Decide fractality");
  auto* pair = app.add_subcommand("pair", "Fractal pair of a fractal graph");
  auto* moments = app.add_subcommand("moments", "Radial operator moments per vertex");
  auto* tree = app.add_subcommand("tree", "Vertex trees of the shadowed graph");
  auto* label = app.add_subcommand("label", "Canonical lattice labeling");
  auto* matrix = app.add_subcommand("matrix", "Truncated radial operator matrix");
  auto* verify = app.add_subcommand("verify", "Compare walk, tree and lattice moment counts");
  for (auto* sub : {info, check, pair, moments, tree, label, matrix, verify}) {
    add_common(sub);
    add_graph(sub);
  }
  moments->add_option("--max-n", max_n, "Largest moment order")->check(CLI::Range(1, 64));
  moments->add_option("--root", root, "Only report this vertex");
  tree->add_option("--root", root, "Root vertex (default: every vertex)");
  tree->add_option("--depth", depth, "Tree depth")->check(CLI::Range(0, 32));
  matrix->add_option("--depth", depth, "Truncation depth L")->check(CLI::Range(0, 32));
  matrix->add_option("--max-n", max_n, "Largest power (default: depth)")
      ->check(CLI::Range(1, 64));
  verify->add_option("--max-n", max_n, "Largest moment order")->check(CLI::Range(1, 64));

  auto* lattice = app.add_subcommand("lattice", "Axis-path counts");
  add_common(lattice);
  lattice->add_option("--N", lattice_n, "Step bound N")->check(CLI::Range(1, 16));
  lattice->add_option("--max-n", max_n, "Largest path length")->check(CLI::Range(1, 64));
  lattice->add_option("--method", method, "brute|recurrence|closed (default: all)")
      ->check(CLI::IsMember({"brute", "recurrence", "closed"}));
  lattice->add_option("--max-paths", opts.max_paths, "Brute-force enumeration budget");

  auto* classify_cmd = app.add_subcommand("classify", "Partition graphs into spectral classes");
  add_common(classify_cmd);
  classify_cmd->add_option("inputs", inputs, "Graph files or directories")->required();

  auto* compare = app.add_subcommand("compare", "Isomorphism and identical distribution");
  add_common(compare);
  compare->add_option("first", graph_path, "First graph")->required()->check(CLI::ExistingFile);
  compare->add_option("second", second_path, "Second graph")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--max-n", max_n, "Largest moment order")->check(CLI::Range(1, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  try {
    if (active == gen) {
      auto g = family(*parse_family(family_arg), gen_n);
      if (regularize_k > 1) g = regularize(g, regularize_k);
      if (glue_loops > 0) g = iterated_glue_loops(g, glue_loops);
      if (!name_arg.empty()) g = g.renamed(name_arg);
      if (opts.out.empty())
        out << dump_graph(g);
      else
        save_graph(g, opts.out);
      return kOk;
    }

    Outcome outcome;
    if (active == lattice) {
      outcome = cmd_lattice(lattice_n, max_n.value_or(8), method, opts);
    } else if (active == classify_cmd) {
      outcome = cmd_classify(inputs);
    } else if (active == compare) {
      outcome = cmd_compare(load_graph(graph_path), load_graph(second_path), max_n.value_or(6),
                            opts);
    } else {
      const auto g = load_graph(graph_path);
      if (active == info) outcome = cmd_info(g);
      if (active == check) outcome = cmd_check(g);
      if (active == pair) outcome = cmd_pair(g);
      if (active == moments) outcome = cmd_moments(g, max_n.value_or(6), root, opts);
      if (active == tree) outcome = cmd_tree(g, root, depth.value_or(4));
      if (active == label) outcome = cmd_label(g);
      if (active == matrix) {
        const std::size_t d = depth.value_or(4);
        outcome = cmd_matrix(g, d, max_n.value_or(d));
      }
      if (active == verify) outcome = cmd_verify(g, max_n.value_or(8), opts);
    }
    emit(command, outcome, opts, out);
    return kOk;
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    report_error(command, e.kind(), e.what(), code, opts, out, err);
    return code;
  } catch (const UsageError& e) {
    report_error(command, "usage", e.what(), kUsage, opts, out, err);
    return kUsage;
  }
}

}  // namespace fractaloid::cli
