#include "lagfe/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lagfe/element.hpp"
#include "lagfe/errors.hpp"
#include "lagfe/json_io.hpp"
#include "lagfe/verify.hpp"

namespace lagfe {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t dim = 0;
  unsigned degree = 0;
  std::string set = "A";
  std::size_t zero_index = 0;
  std::string order = "grsymlex";
  std::string format = "text";
  std::string vertices;
  std::size_t d_max = 3;
  unsigned k_max = 4;
  unsigned samples = 5;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> lemmas;
  unsigned jobs = 0;
};

std::string tuple(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
  return s + ")";
}

// reference family unless --vertices is given; --dim must agree with the file
VertexFamily load_vertices(const Options& o, bool dim_given) {
  if (o.vertices.empty()) {
    if (!dim_given) throw UsageError("--dim is required without --vertices");
    return reference_vertices(o.dim);
  }
  VertexFamily v = read_vertex_family(o.vertices);
  if (dim_given && v.d() != o.dim) {
    throw DimensionMismatchError("--dim " + std::to_string(o.dim) + " but the vertices file has d = " + std::to_string(v.d()));
  }
  return v;
}

int cmd_indices(const Options& o, std::ostream& out) {
  IndexSetSpec spec;
  if (o.set == "A") {
    spec = IndexSetSpec::at_most(o.dim, o.degree);
  } else if (o.set == "C") {
    spec = IndexSetSpec::exact(o.dim, o.degree);
  } else {
    if (o.zero_index < 1 || o.zero_index > o.dim) throw UsageError("--zero-index must lie in [1..dim]");
    spec = IndexSetSpec::zero_at(o.dim, o.degree, o.zero_index);
  }
  const MonomialOrder order = parse_order(o.order);
  const auto list = enumerate(spec, order);
  if (o.format == "json") {
    out << enumeration_to_json(spec, order, list).dump(2) << "\n";
  } else if (o.format == "csv") {
    for (std::size_t i = 1; i <= o.dim; ++i) out << "alpha_" << i << (i == o.dim ? "\n" : ",");
    for (const auto& a : list) {
      for (std::size_t i = 0; i < o.dim; ++i) out << a[i] << (i + 1 == o.dim ? "\n" : ",");
    }
  } else {
    out << "# " << kind_name(spec.kind) << " d=" << o.dim << " k=" << o.degree;
    if (spec.kind == SetKind::ZeroAt) out << " i=" << o.zero_index;
    out << " order=" << o.order << " cardinal=" << cardinal(spec) << "\n";
    for (const auto& a : list) out << a.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_nodes(const Options& o, bool dim_given, std::ostream& out) {
  const VertexFamily v = load_vertices(o, dim_given);
  const auto nodes = lagrange_nodes(v, o.degree);
  if (o.format == "json") {
    Json j;
    j["d"] = v.d();
    j["k"] = o.degree;
    j["vertices"] = to_json(v)["vertices"];
    j["nodes"] = nodes_to_json(nodes);
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << nodes_to_csv(v.d(), nodes);
  } else {
    out << "# Lagrange nodes d=" << v.d() << " k=" << o.degree << " count=" << nodes.size() << "\n";
    for (const auto& n : nodes) out << n.alpha.to_string() << " -> " << tuple(n.point) << "\n";
  }
  return kExitOk;
}

int cmd_shape(const Options& o, bool dim_given, std::ostream& out) {
  const VertexFamily v = load_vertices(o, dim_given);
  const LagrangeElement el = build_element(v, o.degree);
  if (o.format == "json") {
    out << to_json(el).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "alpha,shape_function\n";
    for (std::size_t b = 0; b < el.node_index.size(); ++b) {
      out << '"' << el.node_index[b].to_string() << "\",\"" << el.shape_functions[b].to_string() << "\"\n";
    }
  } else {
    out << "# shape functions d=" << v.d() << " k=" << o.degree << " count=" << el.shape_functions.size() << "\n";
    for (std::size_t b = 0; b < el.node_index.size(); ++b) {
      out << "theta" << el.node_index[b].to_string() << " = " << el.shape_functions[b].to_string() << "\n";
    }
  }
  return kExitOk;
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("LAGFE_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (s[pos] != '\0') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("LAGFE_SEED is not an unsigned integer: ") + s);
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig cfg;
  cfg.d_max = o.d_max;
  cfg.k_max = o.k_max;
  cfg.samples = o.samples;
  cfg.seed = o.seed ? *o.seed : env_seed().value_or(kDefaultSeed);
  cfg.filter = o.lemmas;
  cfg.jobs = o.jobs;
  const VerifyReport r = run_suite(cfg);
  if (o.format == "json") {
    out << r.to_json().dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "id,status,cases\n";
    for (const auto& c : r.checks) out << c.id << ',' << (c.pass ? "pass" : "fail") << ',' << c.cases << "\n";
  } else {
    out << r.to_text();
  }
  return r.all_pass() ? kExitOk : kExitCheckFailed;
}

Json witness_json(const OrderWitness& w) {
  Json j;
  j["a"] = to_json(w.a);
  j["b"] = to_json(w.b);
  if (w.fa) j["f_a"] = to_json(*w.fa);
  if (w.fb) j["f_b"] = to_json(*w.fb);
  if (w.insert_position) j["i"] = w.insert_position;
  return j;
}

Json condition_json(const ConditionResult& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) w.push_back(witness_json(x));
  return {{"holds", c.holds}, {"witnesses", std::move(w)}};
}

std::string witness_text(const OrderWitness& w, const char* map) {
  std::ostringstream os;
  if (w.fa) {
    os << map;
    if (w.insert_position) os << "[i=" << w.insert_position << "]";
    os << ": " << w.a.to_string() << " < " << w.b.to_string() << " but " << w.fa->to_string() << " > " << w.fb->to_string();
  } else {
    os << w.a.to_string() << " should precede " << w.b.to_string();
  }
  return os.str();
}

int cmd_orders(const Options& o, std::ostream& out) {
  std::vector<OrderConditionReport> rows;
  for (auto ord : kGradedOrders) rows.push_back(check_order_conditions(ord, o.dim, o.degree));
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["order"] = order_name(r.order);
      j["i"] = condition_json(r.cond_i);
      j["ii"] = {{"holds", r.cond_ii()},
                 {"f_head", condition_json(r.head)},
                 {"f_tail", condition_json(r.tail)},
                 {"f_insert_zero", condition_json(r.insert)}};
      j["iii"] = condition_json(r.cond_iii);
      arr.push_back(std::move(j));
    }
    out << Json{{"d", o.dim}, {"k", o.degree}, {"orders", std::move(arr)}}.dump(2) << "\n";
    return kExitOk;
  }
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (o.format == "csv") {
    out << "order,i,ii,ii_head,ii_tail,ii_insert,iii\n";
    for (const auto& r : rows) {
      out << order_name(r.order) << ',' << yn(r.cond_i.holds) << ',' << yn(r.cond_ii()) << ',' << yn(r.head.holds) << ','
          << yn(r.tail.holds) << ',' << yn(r.insert.holds) << ',' << yn(r.cond_iii.holds) << "\n";
    }
    return kExitOk;
  }
  out << "# order conditions d=" << o.dim << " k=" << o.degree << "\n";
  out << "order     (i)  (ii) head tail insert  (iii)\n";
  for (const auto& r : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%-9s %-4s %-4s %-4s %-4s %-6s  %s\n", std::string(order_name(r.order)).c_str(), yn(r.cond_i.holds),
                  yn(r.cond_ii()), yn(r.head.holds), yn(r.tail.holds), yn(r.insert.holds), yn(r.cond_iii.holds));
    out << line;
  }
  for (const auto& r : rows) {
    const auto first = [&](const ConditionResult& c, const char* label, const char* map) {
      for (const auto& w : c.witnesses) out << "  " << order_name(r.order) << " " << label << " " << witness_text(w, map) << "\n";
    };
    first(r.cond_i, "(i)", "");
    first(r.head, "(ii)", "f_head");
    first(r.tail, "(ii)", "f_tail");
    first(r.insert, "(ii)", "f_insert_zero");
    first(r.cond_iii, "(iii)", "");
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simplicial Lagrange finite elements", "lagfe"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* indices = app.add_subcommand("indices", "enumerate A_k^d, C_k^d or A_{k,i}^d in a monomial order");
  indices->add_option("--dim", o.dim, "dimension d")->required()->check(CLI::PositiveNumber);
  indices->add_option("--degree", o.degree, "degree k")->required();
  indices->add_option("--set", o.set, "A (length <= k), C (length = k) or Azero (component i is 0)")->check(CLI::IsMember({"A", "C", "Azero"}));
  indices->add_option("--zero-index", o.zero_index, "i in [1..d] for --set Azero");
  indices->add_option("--order", o.order, "lex, colex, symlex, revlex, grlex, grcolex, grsymlex or grevlex")
      ->check(CLI::IsMember({"lex", "colex", "symlex", "revlex", "grlex", "grcolex", "grsymlex", "grevlex"}));
  indices->add_option("--format", o.format)->check(CLI::IsMember(formats));

  CLI::Option* nodes_dim = nullptr;
  CLI::Option* shape_dim = nullptr;
  auto* nodes = app.add_subcommand("nodes", "tabulate Lagrange nodes");
  nodes_dim = nodes->add_option("--dim", o.dim, "dimension d")->check(CLI::PositiveNumber);
  nodes->add_option("--degree", o.degree, "degree k")->required();
  nodes->add_option("--vertices", o.vertices, "vertex family JSON file (default: reference simplex)");
  nodes->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* shape = app.add_subcommand("shape", "compute shape functions");
  shape_dim = shape->add_option("--dim", o.dim, "dimension d")->check(CLI::PositiveNumber);
  shape->add_option("--degree", o.degree, "degree k")->required();
  shape->add_option("--vertices", o.vertices, "vertex family JSON file (default: reference simplex)");
  shape->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run the exact verification suite");
  verify->add_option("--dmax", o.d_max, "largest dimension")->check(CLI::PositiveNumber);
  verify->add_option("--kmax", o.k_max, "largest degree");
  verify->add_option("--samples", o.samples, "random families per case")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "RNG seed (default: $LAGFE_SEED, else built in)");
  verify->add_option("--lemma", o.lemmas, "run only these check ids (repeatable)");
  verify->add_option("--jobs", o.jobs, "worker threads (0: hardware concurrency)");
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* orders = app.add_subcommand("orders", "report conditions (i)-(iii) for each graded order");
  orders->add_option("--dim", o.dim, "dimension d")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  orders->add_option("--degree", o.degree, "degree k")->required();
  orders->add_option("--format", o.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (indices->parsed()) return cmd_indices(o, out);
    if (nodes->parsed()) return cmd_nodes(o, nodes_dim->count() > 0, out);
    if (shape->parsed()) return cmd_shape(o, shape_dim->count() > 0, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_orders(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownLemmaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace lagfe
