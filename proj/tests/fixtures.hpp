#pragma once

// Worked example circuits used across the test suites: a three-node
// resistor network composed with a two-resistor stage that merges all of
// its terminals into one node.

#include "compnet/circuit.hpp"

namespace compnet::fixtures {

inline LGraph triangle_graph() {
  return LGraph::make(3, {LEdge{1, 0, Label::parse("0.2")}, LEdge{0, 1, Label::parse("1.3")},
                          LEdge{0, 2, Label::parse("0.8")}, LEdge{2, 1, Label::parse("2.0")}});
}

inline LGraph stage_graph() {
  return LGraph::make(3, {LEdge{0, 1, Label::parse("1.7")}, LEdge{2, 1, Label::parse("0.3")}});
}

/// One input on node 0, two outputs both on node 1.
inline Circuit triangle_circuit() {
  Cospan c(FinSet{1}, FinSet{2}, FinSet{3}, FinFunction(FinSet{1}, FinSet{3}, {0}),
           FinFunction(FinSet{2}, FinSet{3}, {1, 1}));
  return Circuit{c, triangle_graph()};
}

/// Two inputs on nodes 0 and 2, outputs on nodes 1 and 2.
inline Circuit stage_circuit() {
  Cospan c(FinSet{2}, FinSet{2}, FinSet{3}, FinFunction(FinSet{2}, FinSet{3}, {0, 2}),
           FinFunction(FinSet{2}, FinSet{3}, {1, 2}));
  return Circuit{c, stage_graph()};
}

/// The triangle with a single output on node 1 (used for tensoring).
inline Circuit triangle_single_output() {
  Cospan c(FinSet{1}, FinSet{1}, FinSet{3}, FinFunction(FinSet{1}, FinSet{3}, {0}),
           FinFunction(FinSet{1}, FinSet{3}, {1}));
  return Circuit{c, triangle_graph()};
}

}  // namespace compnet::fixtures
