#pragma once

#include <vector>

#include "compnet/error.hpp"

namespace compnet {

/// Skeletal finite set: the elements are implicitly 0..size-1.
struct FinSet {
  int size = 0;

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// Total function between skeletal finite sets, given by its value table.
struct FinFunction {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;  // table[k] in 0..cod.size-1, one entry per domain element

  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<int> table);

  int operator()(int k) const { return table[static_cast<std::size_t>(k)]; }

  friend bool operator==(const FinFunction&, const FinFunction&) = default;
};

FinFunction identity(FinSet a);

/// Diagrammatic composition: apply f, then g. Requires f.cod == g.dom.
FinFunction compose(const FinFunction& f, const FinFunction& g);

/// The chosen coproduct A+B: left block first, then right block.
struct Coproduct {
  FinSet set;
  FinFunction inj_left;
  FinFunction inj_right;
};

Coproduct coproduct(FinSet a, FinSet b);

/// The unique map [u,v]: A+B -> Q with [u,v] o inj_left = u, [u,v] o inj_right = v.
FinFunction copair(const FinFunction& u, const FinFunction& v);

/// Block sum f+g: A+B -> A'+B'.
FinFunction block_sum(const FinFunction& f, const FinFunction& g);

/// Block swap A+B -> B+A.
FinFunction block_swap(FinSet a, FinSet b);

/// The unique map out of the empty set.
FinFunction from_empty(FinSet a);

/// Chosen pushout of a span f: Y -> N, g: Y -> N'. The apex is the quotient
/// of N+N' by the relation generated by f(y) ~ g(y); classes are numbered
/// contiguously in order of their minimal representative in N+N'.
struct PushoutResult {
  FinSet apex;
  FinFunction left_leg;        // N -> apex
  FinFunction right_leg;       // N' -> apex
  FinFunction from_coproduct;  // N+N' -> apex
};

PushoutResult pushout(const FinFunction& f, const FinFunction& g);

/// The unique w: apex -> Q with w o left_leg = u and w o right_leg = v,
/// for a commuting cocone (u, v).
FinFunction pushout_universal(const PushoutResult& p, const FinFunction& u,
                              const FinFunction& v);

bool is_bijection(const FinFunction& f);
FinFunction inverse(const FinFunction& f);

/// Test-only hook: disabling normalization makes pushout return the raw
/// union-find labeling over N+N' without renumbering classes contiguously,
/// which violates the pushout contract. Used by mutation-sensitivity tests.
void set_pushout_normalization_for_testing(bool enabled);

}  // namespace compnet
