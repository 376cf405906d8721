#include "compnet/io.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace compnet {

namespace {

using nlohmann::json;

int require_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int>() < 0)
    fail(errc::parse_error, std::string("missing or invalid \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<int> require_table(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(errc::parse_error, std::string("missing or invalid \"") + key + "\"");
  std::vector<int> t;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) fail(errc::parse_error, std::string(key) + " entries must be integers");
    t.push_back(v.get<int>());
  }
  return t;
}

Cospan cospan_from_json(const json& j) {
  FinSet left{require_count(j, "left_foot")};
  FinSet right{require_count(j, "right_foot")};
  FinSet apex{require_count(j, "apex")};
  try {
    return Cospan(left, right, apex, FinFunction(left, apex, require_table(j, "in_leg")),
                  FinFunction(right, apex, require_table(j, "out_leg")));
  } catch (const Error& e) {
    if (e.code() == errc::invalid_function) fail(errc::parse_error, e.what());
    throw;
  }
}

LGraph lgraph_from_json(const json& j, int nodes) {
  if (!j.contains("edges") || !j["edges"].is_array())
    fail(errc::parse_error, "circuit decoration needs an \"edges\" array");
  std::vector<LEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("src") || !e.contains("tgt") || !e.contains("label"))
      fail(errc::parse_error, "each edge needs src, tgt and label");
    if (!e["label"].is_string()) fail(errc::parse_error, "edge labels must be decimal strings");
    edges.push_back(
        LEdge{e["src"].get<int>(), e["tgt"].get<int>(), Label::parse(e["label"].get<std::string>())});
  }
  try {
    return LGraph::make(nodes, std::move(edges));
  } catch (const Error& e) {
    fail(errc::parse_error, e.what());
  }
}

PolyVectorField vf_from_json(const json& j, int dim) {
  if (!j.contains("components") || !j["components"].is_array())
    fail(errc::parse_error, "vectfield decoration needs a \"components\" array");
  std::vector<Polynomial> components;
  for (const auto& c : j["components"]) {
    if (!c.is_string()) fail(errc::parse_error, "components must be polynomial strings");
    components.push_back(Polynomial::parse(c.get<std::string>(), dim));
  }
  if (static_cast<int>(components.size()) != dim)
    fail(errc::parse_error, "component count does not match the apex size");
  return PolyVectorField{FinSet{dim}, std::move(components)};
}

json cospan_to_json(const Cospan& c) {
  json j;
  j["left_foot"] = c.left_foot.size;
  j["right_foot"] = c.right_foot.size;
  j["apex"] = c.apex.size;
  j["in_leg"] = c.in_leg.table;
  j["out_leg"] = c.out_leg.table;
  return j;
}

}  // namespace

std::string network_backend(const Network& n) {
  return std::holds_alternative<Circuit>(n) ? "circuit" : "vectfield";
}

Network network_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "network document must be a JSON object");
  if (!j.contains("backend") || !j["backend"].is_string())
    fail(errc::parse_error, "network document needs a \"backend\" tag");
  const std::string backend = j["backend"].get<std::string>();
  Cospan c = cospan_from_json(j);
  if (!j.contains("decoration") || !j["decoration"].is_object())
    fail(errc::parse_error, "network document needs a \"decoration\" object");
  if (backend == "circuit")
    return Circuit{c, lgraph_from_json(j["decoration"], c.apex.size)};
  if (backend == "vectfield") return OpenSystem{c, vf_from_json(j["decoration"], c.apex.size)};
  fail(errc::parse_error, "unknown backend \"" + backend + "\"");
}

nlohmann::json network_to_json(const Network& n) {
  return std::visit(
      [](const auto& dc) {
        json j = cospan_to_json(dc.cospan);
        using T = std::decay_t<decltype(dc)>;
        if constexpr (std::is_same_v<T, Circuit>) {
          j["backend"] = "circuit";
          json edges = json::array();
          for (const LEdge& e : dc.decoration.edges)
            edges.push_back({{"src", e.src}, {"tgt", e.tgt}, {"label", e.label.str()}});
          j["decoration"] = {{"edges", std::move(edges)}};
        } else {
          j["backend"] = "vectfield";
          json components = json::array();
          for (const Polynomial& p : dc.decoration.components) components.push_back(p.str());
          j["decoration"] = {{"components", std::move(components)}};
        }
        return j;
      },
      n);
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

Network load_network_file(const std::string& path) {
  return network_from_json(read_json_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(errc::io_error, "failed writing " + path);
}

namespace {

PipelineExpr expr_from_json(const json& j, const std::string& position) {
  PipelineExpr e;
  e.position = position;
  if (j.is_string()) {
    e.kind = PipelineExpr::Kind::Leaf;
    e.name = j.get<std::string>();
    return e;
  }
  if (!j.is_array() || j.size() != 3 || !j[0].is_string())
    fail(errc::parse_error,
         position + ": expected a network name or [\"compose\"|\"tensor\", lhs, rhs]");
  const std::string op = j[0].get<std::string>();
  if (op == "compose")
    e.kind = PipelineExpr::Kind::Compose;
  else if (op == "tensor")
    e.kind = PipelineExpr::Kind::Tensor;
  else
    fail(errc::parse_error, position + ": unknown operator \"" + op + "\"");
  e.lhs = std::make_unique<PipelineExpr>(expr_from_json(j[1], position + "[1]"));
  e.rhs = std::make_unique<PipelineExpr>(expr_from_json(j[2], position + "[2]"));
  return e;
}

struct TypeInfo {
  std::string backend;
  FinSet left, right;
};

TypeInfo type_check(const PipelineExpr& e, const std::map<std::string, Network>& networks) {
  if (e.kind == PipelineExpr::Kind::Leaf) {
    auto it = networks.find(e.name);
    if (it == networks.end())
      fail(errc::type_error, e.position + ": unknown network \"" + e.name + "\"");
    return std::visit(
        [&](const auto& dc) {
          return TypeInfo{network_backend(it->second), dc.cospan.left_foot,
                          dc.cospan.right_foot};
        },
        it->second);
  }
  TypeInfo l = type_check(*e.lhs, networks);
  TypeInfo r = type_check(*e.rhs, networks);
  if (l.backend != r.backend)
    fail(errc::type_error,
         e.position + ": cannot mix backends " + l.backend + " and " + r.backend);
  if (e.kind == PipelineExpr::Kind::Compose) {
    if (l.right != r.left)
      fail(errc::type_error, e.position + ": feet mismatch, right foot " +
                                 std::to_string(l.right.size) + " vs left foot " +
                                 std::to_string(r.left.size));
    return TypeInfo{l.backend, l.left, r.right};
  }
  return TypeInfo{l.backend, FinSet{l.left.size + r.left.size},
                  FinSet{l.right.size + r.right.size}};
}

Network eval_plain(const PipelineExpr& e, const std::map<std::string, Network>& networks) {
  if (e.kind == PipelineExpr::Kind::Leaf) return networks.at(e.name);
  Network l = eval_plain(*e.lhs, networks);
  Network r = eval_plain(*e.rhs, networks);
  return e.kind == PipelineExpr::Kind::Compose ? network_compose(l, r) : network_tensor(l, r);
}

// --- normalized evaluation -------------------------------------------------
//
// Legs are tracked as maps into the coproduct of all leaf apexes; compose
// nodes only record identifications in a union-find over that coproduct.
// The final apex is the quotient with classes numbered by minimal member,
// which is invariant under reassociation of the expression tree.

struct NormUf {
  std::vector<int> parent;
  explicit NormUf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

struct FlatValue {
  FinSet left, right;
  std::vector<int> in_leg, out_leg;  // entries are indices into the leaf coproduct
};

void collect_leaves(const PipelineExpr& e, std::vector<const PipelineExpr*>& leaves) {
  if (e.kind == PipelineExpr::Kind::Leaf) {
    leaves.push_back(&e);
    return;
  }
  collect_leaves(*e.lhs, leaves);
  collect_leaves(*e.rhs, leaves);
}

FlatValue eval_flat(const PipelineExpr& e, const std::map<std::string, Network>& networks,
                    NormUf& uf, int& next_offset) {
  if (e.kind == PipelineExpr::Kind::Leaf) {
    const Network& n = networks.at(e.name);
    return std::visit(
        [&](const auto& dc) {
          FlatValue v;
          v.left = dc.cospan.left_foot;
          v.right = dc.cospan.right_foot;
          const int offset = next_offset;
          next_offset += dc.cospan.apex.size;
          for (int k : dc.cospan.in_leg.table) v.in_leg.push_back(offset + k);
          for (int k : dc.cospan.out_leg.table) v.out_leg.push_back(offset + k);
          return v;
        },
        n);
  }
  FlatValue l = eval_flat(*e.lhs, networks, uf, next_offset);
  FlatValue r = eval_flat(*e.rhs, networks, uf, next_offset);
  if (e.kind == PipelineExpr::Kind::Compose) {
    for (std::size_t y = 0; y < l.out_leg.size(); ++y) uf.unite(l.out_leg[y], r.in_leg[y]);
    return FlatValue{l.left, r.right, std::move(l.in_leg), std::move(r.out_leg)};
  }
  FlatValue v;
  v.left = FinSet{l.left.size + r.left.size};
  v.right = FinSet{l.right.size + r.right.size};
  v.in_leg = std::move(l.in_leg);
  v.in_leg.insert(v.in_leg.end(), r.in_leg.begin(), r.in_leg.end());
  v.out_leg = std::move(l.out_leg);
  v.out_leg.insert(v.out_leg.end(), r.out_leg.begin(), r.out_leg.end());
  return v;
}

template <DecorationBackend B>
Network finish_normalized(const FlatValue& flat, const FinFunction& quotient,
                          typename B::Value combined) {
  auto to_class = [&](const std::vector<int>& leg, FinSet foot) {
    std::vector<int> t;
    t.reserve(leg.size());
    for (int k : leg) t.push_back(quotient(k));
    return FinFunction(foot, quotient.cod, std::move(t));
  };
  Cospan c(flat.left, flat.right, quotient.cod, to_class(flat.in_leg, flat.left),
           to_class(flat.out_leg, flat.right));
  return DecoratedCospan<B>{std::move(c), B::transport(quotient, std::move(combined))};
}

Network eval_normalized(const PipelineExpr& root,
                        const std::map<std::string, Network>& networks) {
  std::vector<const PipelineExpr*> leaves;
  collect_leaves(root, leaves);
  int total = 0;
  for (const PipelineExpr* leaf : leaves)
    total += std::visit([](const auto& dc) { return dc.cospan.apex.size; },
                        networks.at(leaf->name));
  NormUf uf(total);
  int next_offset = 0;
  FlatValue flat = eval_flat(root, networks, uf, next_offset);

  std::vector<int> quotient_table(total);
  std::vector<int> index(total, -1);
  int classes = 0;
  for (int k = 0; k < total; ++k) {
    int r = uf.find(k);
    if (index[r] < 0) index[r] = classes++;
    quotient_table[k] = index[r];
  }
  FinFunction quotient(FinSet{total}, FinSet{classes}, std::move(quotient_table));

  const Network& first = networks.at(leaves.front()->name);
  if (std::holds_alternative<Circuit>(first)) {
    LGraph combined = lgraph_unit();
    for (const PipelineExpr* leaf : leaves)
      combined = lgraph_combine(combined, std::get<Circuit>(networks.at(leaf->name)).decoration);
    return finish_normalized<CircuitDecoration>(flat, quotient, std::move(combined));
  }
  PolyVectorField combined = vf_unit();
  for (const PipelineExpr* leaf : leaves)
    combined = vf_combine(combined, std::get<OpenSystem>(networks.at(leaf->name)).decoration);
  return finish_normalized<VectFieldDecoration>(flat, quotient, std::move(combined));
}

}  // namespace

Pipeline pipeline_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("networks") || !j["networks"].is_object() ||
      !j.contains("pipeline"))
    fail(errc::parse_error, "pipeline document needs \"networks\" and \"pipeline\"");
  Pipeline p;
  for (const auto& [name, value] : j["networks"].items()) {
    if (value.is_object() && value.contains("file")) {
      std::filesystem::path path(value["file"].get<std::string>());
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      p.networks.emplace(name, load_network_file(path.string()));
    } else {
      p.networks.emplace(name, network_from_json(value));
    }
  }
  p.root = expr_from_json(j["pipeline"], "pipeline");
  return p;
}

Pipeline load_pipeline_file(const std::string& path) {
  return pipeline_from_json(read_json_file(path),
                            std::filesystem::path(path).parent_path().string());
}

Network network_compose(const Network& a, const Network& b) {
  if (network_backend(a) != network_backend(b))
    fail(errc::type_error, "cannot compose networks with different backends");
  if (std::holds_alternative<Circuit>(a))
    return dcompose(std::get<Circuit>(a), std::get<Circuit>(b));
  return dcompose(std::get<OpenSystem>(a), std::get<OpenSystem>(b));
}

Network network_tensor(const Network& a, const Network& b) {
  if (network_backend(a) != network_backend(b))
    fail(errc::type_error, "cannot tensor networks with different backends");
  if (std::holds_alternative<Circuit>(a))
    return dtensor(std::get<Circuit>(a), std::get<Circuit>(b));
  return dtensor(std::get<OpenSystem>(a), std::get<OpenSystem>(b));
}

Network eval_pipeline(const Pipeline& p, bool normalize) {
  type_check(p.root, p.networks);  // whole-tree check before any computation
  if (!normalize) return eval_plain(p.root, p.networks);
  return eval_normalized(p.root, p.networks);
}

json law_reports_json(const std::vector<LawReport>& reports, const CaseGenerator& gen) {
  json out;
  out["seed"] = gen.seed;
  out["max_set_size"] = gen.max_set_size;
  bool passed = true;
  json laws = json::array();
  for (const LawReport& r : reports) {
    json failures = json::array();
    for (const LawFailure& f : r.failures)
      failures.push_back({{"case", f.case_index}, {"message", f.message}, {"repro", f.repro}});
    laws.push_back({{"law", r.law},
                    {"cases", r.cases_run},
                    {"failures", std::move(failures)},
                    {"elapsed_ms", r.elapsed_ms}});
    passed = passed && r.passed();
  }
  out["laws"] = std::move(laws);
  out["passed"] = passed;
  return out;
}

}  // namespace compnet
