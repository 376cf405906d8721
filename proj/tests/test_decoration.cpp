#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "compnet/circuit.hpp"
#include "compnet/vectfield.hpp"
#include "fixtures.hpp"

using namespace compnet;
using namespace compnet::fixtures;

namespace {

OpenSystem open_system(Cospan c, std::vector<Polynomial> components) {
  FinSet space{static_cast<int>(components.size())};
  return OpenSystem{std::move(c), PolyVectorField::make(space, std::move(components))};
}

}  // namespace

TEST_CASE("composing the two worked circuits") {
  Circuit composite = dcompose(triangle_circuit(), stage_circuit());
  CHECK(composite.cospan.apex.size == 4);
  CHECK(composite.cospan.in_leg.table == std::vector<int>{0});
  CHECK(composite.cospan.out_leg.table == std::vector<int>{3, 1});
  REQUIRE(composite.decoration.edges.size() == 6);
  std::multiset<std::string> labels;
  for (const LEdge& e : composite.decoration.edges) labels.insert(e.label.str());
  CHECK(labels == std::multiset<std::string>{"0.2", "0.3", "0.8", "1.3", "1.7", "2"});
  // the two new edges run in parallel from the merged node to the new node
  for (const LEdge& e : composite.decoration.edges)
    if (e.label == Label::parse("1.7") || e.label == Label::parse("0.3")) {
      CHECK(e.src == 1);
      CHECK(e.tgt == 3);
    }
}

TEST_CASE("tensoring the two worked circuits") {
  Circuit t = dtensor(triangle_single_output(), stage_circuit());
  CHECK(t.cospan.left_foot.size == 3);
  CHECK(t.cospan.right_foot.size == 3);
  CHECK(t.cospan.apex.size == 6);
  CHECK(t.decoration.edges.size() == 6);
  // blocks stay disjoint
  for (const LEdge& e : t.decoration.edges) {
    const bool left = e.src < 3 && e.tgt < 3;
    const bool right = e.src >= 3 && e.tgt >= 3;
    CHECK((left || right));
  }
}

TEST_CASE("decorated unit laws") {
  Circuit m = triangle_circuit();
  Circuit e = didentity<CircuitDecoration>(FinSet{0});
  Circuit mt = dtensor(m, e);
  CHECK(mt.cospan == m.cospan);
  CHECK(mt.decoration == m.decoration);

  // composing with the decorated identity agrees with m along the unitor
  Circuit right = dcompose(m, didentity<CircuitDecoration>(m.cospan.right_foot));
  GlobularIso ru = right_unitor(m.cospan);
  CHECK(right.cospan == ru.source);
  CHECK(lgraph_transport(ru.apex_bijection, right.decoration) == m.decoration);

  Circuit left = dcompose(didentity<CircuitDecoration>(m.cospan.left_foot), m);
  GlobularIso lu = left_unitor(m.cospan);
  CHECK(lgraph_transport(lu.apex_bijection, left.decoration) == m.decoration);
}

TEST_CASE("trivial decorations") {
  CHECK(trivial_decoration<CircuitDecoration>(FinSet{3}) ==
        LGraph::make(3, {}));
  PolyVectorField zero = trivial_decoration<VectFieldDecoration>(FinSet{2});
  CHECK(zero.space.size == 2);
  for (const Polynomial& p : zero.components) CHECK(p.is_zero());
  CHECK(didentity<CircuitDecoration>(FinSet{0}).decoration == lgraph_unit());
  CHECK(didentity<VectFieldDecoration>(FinSet{0}).decoration == vf_unit());
}

TEST_CASE("decorated companions and conjoints") {
  FinFunction f(FinSet{2}, FinSet{1}, {0, 0});
  Circuit comp = dcompanion<CircuitDecoration>(f);
  CHECK(comp.cospan == companion(f));
  CHECK(comp.decoration.edges.empty());
  Circuit conj = dconjoint<CircuitDecoration>(f);
  CHECK(conj.cospan == conjoint(f));

  FinFunction id3 = identity(FinSet{3});
  Circuit di = didentity<CircuitDecoration>(FinSet{3});
  CHECK(dcompanion<CircuitDecoration>(id3).cospan == di.cospan);
  CHECK(dcompanion<CircuitDecoration>(id3).decoration == di.decoration);
}

TEST_CASE("decorated 2-morphism checking") {
  Circuit m = triangle_circuit();
  CHECK(check_decorated_map(DecoratedMap{identity(m.cospan.apex)}, m, m));

  // relabeling with the transported decoration passes
  FinFunction h(FinSet{3}, FinSet{3}, {2, 0, 1});
  Cospan relabeled(m.cospan.left_foot, m.cospan.right_foot, m.cospan.apex,
                   compose(m.cospan.in_leg, h), compose(m.cospan.out_leg, h));
  Circuit tgt{relabeled, lgraph_transport(h, m.decoration)};
  CHECK(check_decorated_map(DecoratedMap{h}, m, tgt));

  // altering one label is detected as a decoration failure
  auto edges = tgt.decoration.edges;
  edges[0].label = Label::parse("9");
  Circuit bad{relabeled, LGraph::make(3, std::move(edges))};
  auto why = decorated_map_diagnose(DecoratedMap{h}, m, bad);
  REQUIRE(why.has_value());
  CHECK(*why == "decoration not preserved");
}

TEST_CASE("dinterchanger transports decorations") {
  Circuit e = didentity<CircuitDecoration>(FinSet{1});
  DecoratedMap x = dinterchanger(e, e, e, e);
  CHECK(x.apex_map == identity(FinSet{2}));

  Circuit m1 = triangle_circuit(), m2 = stage_circuit();
  Circuit n1 = triangle_single_output();
  Circuit n2{Cospan(FinSet{1}, FinSet{0}, FinSet{1}, FinFunction(FinSet{1}, FinSet{1}, {0}),
                    FinFunction(FinSet{0}, FinSet{1}, {})),
             LGraph::make(1, {LEdge{0, 0, Label::parse("5")}})};
  DecoratedMap xi = dinterchanger(m1, n1, m2, n2);
  auto lhs = dcompose(dtensor(m1, n1), dtensor(m2, n2));
  auto rhs = dtensor(dcompose(m1, m2), dcompose(n1, n2));
  CHECK(check_decorated_map(xi, lhs, rhs));
}

TEST_CASE("a backend law violation surfaces as an eager error") {
  // same value type as the circuit backend, but combine forgets the right
  // block's edges, so the interchanger cannot transport decorations
  struct Broken {
    using Value = LGraph;
    static constexpr std::string_view name() { return "broken"; }
    static LGraph transport(const FinFunction& f, const LGraph& g) {
      return lgraph_transport(f, g);
    }
    static LGraph combine(const LGraph& a, const LGraph& b) {
      LGraph merged = lgraph_combine(a, b);
      if (!b.edges.empty() && !a.edges.empty()) merged.edges.erase(merged.edges.begin());
      return merged;
    }
    static LGraph unit() { return lgraph_unit(); }
    static bool equal(const LGraph& a, const LGraph& b) { return a == b; }
    static FinSet carrier(const LGraph& g) { return FinSet{g.node_count}; }
  };
  DecoratedCospan<Broken> m1{triangle_circuit().cospan, triangle_graph()};
  DecoratedCospan<Broken> m2{stage_circuit().cospan, stage_graph()};
  DecoratedCospan<Broken> n1{triangle_single_output().cospan, triangle_graph()};
  Cospan loop(FinSet{1}, FinSet{0}, FinSet{1}, FinFunction(FinSet{1}, FinSet{1}, {0}),
              FinFunction(FinSet{0}, FinSet{1}, {}));
  DecoratedCospan<Broken> n2{loop, LGraph::make(1, {LEdge{0, 0, Label::parse("5")}})};
  CHECK_THROWS_WITH_AS(dinterchanger(m1, n1, m2, n2),
                       doctest::Contains("does not transport"), Error);
}

TEST_CASE("vector-field composition sums over merged state") {
  // two one-dimensional systems glued along their single interface point
  Cospan left(FinSet{0}, FinSet{1}, FinSet{1}, FinFunction(FinSet{0}, FinSet{1}, {}),
              FinFunction(FinSet{1}, FinSet{1}, {0}));
  Cospan right(FinSet{1}, FinSet{0}, FinSet{1}, FinFunction(FinSet{1}, FinSet{1}, {0}),
               FinFunction(FinSet{0}, FinSet{1}, {}));
  OpenSystem a = open_system(left, {Polynomial::parse("x0^2", 1)});
  OpenSystem b = open_system(right, {Polynomial::parse("3*x0", 1)});
  OpenSystem glued = dcompose(a, b);
  CHECK(glued.cospan.apex.size == 1);
  // direct symbolic route: combine on the coproduct, then collapse
  PolyVectorField expected = vf_transport(
      FinFunction(FinSet{2}, FinSet{1}, {0, 0}),
      vf_combine(a.decoration, b.decoration));
  CHECK(glued.decoration == expected);
  CHECK(glued.decoration.components[0] == Polynomial::parse("x0^2 + 3*x0", 1));
}

TEST_CASE("make_decorated validates the carrier") {
  CHECK_THROWS_AS(make_decorated<CircuitDecoration>(identity_cospan(FinSet{2}),
                                                    LGraph::make(3, {})),
                  Error);
}
