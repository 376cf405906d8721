#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "compnet/decoration.hpp"

namespace compnet {

/// Exact decimal edge label, normalized so equal values have equal
/// representations: value = unscaled / 10^scale with minimal scale >= 0.
struct Label {
  long long unscaled = 0;
  int scale = 0;

  static Label parse(std::string_view text);
  std::string str() const;

  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b) { return (a <=> b) == 0; }
};

struct LEdge {
  int src = 0;
  int tgt = 0;
  Label label;

  friend auto operator<=>(const LEdge&, const LEdge&) = default;
};

/// Labeled directed multigraph on the nodes 0..node_count-1, kept in
/// canonical form: edges sorted by (src, tgt, label). Parallel edges with
/// equal labels are allowed (multiset semantics).
struct LGraph {
  int node_count = 0;
  std::vector<LEdge> edges;

  static LGraph make(int node_count, std::vector<LEdge> edges);

  friend bool operator==(const LGraph&, const LGraph&) = default;
};

/// Relabel nodes along f: (E, f o s, f o t, l) on f.cod, re-canonicalized.
LGraph lgraph_transport(const FinFunction& f, const LGraph& g);

/// Disjoint union on the chosen coproduct of the node sets.
LGraph lgraph_combine(const LGraph& a, const LGraph& b);

LGraph lgraph_unit();

struct CircuitDecoration {
  using Value = LGraph;
  static constexpr std::string_view name() { return "circuit"; }
  static LGraph transport(const FinFunction& f, const LGraph& g) {
    return lgraph_transport(f, g);
  }
  static LGraph combine(const LGraph& a, const LGraph& b) { return lgraph_combine(a, b); }
  static LGraph unit() { return lgraph_unit(); }
  static bool equal(const LGraph& a, const LGraph& b) { return a == b; }
  static FinSet carrier(const LGraph& g) { return FinSet{g.node_count}; }
};

using Circuit = DecoratedCospan<CircuitDecoration>;

/// Deterministic DOT text with gray input/output marker nodes.
std::string dot_export(const Circuit& c);

}  // namespace compnet
