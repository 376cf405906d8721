#include "compnet/finset.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

namespace compnet {

namespace {

std::atomic<bool> g_normalize_pushouts{true};

// Union by minimum member, so the root of every class is its smallest
// element; canonical class numbering then falls out of a single scan.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

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

}  // namespace

FinFunction::FinFunction(FinSet d, FinSet c, std::vector<int> t)
    : dom(d), cod(c), table(std::move(t)) {
  if (static_cast<int>(table.size()) != dom.size)
    fail(errc::invalid_function, "table length " + std::to_string(table.size()) +
                                     " does not match domain size " + std::to_string(dom.size));
  for (int v : table)
    if (v < 0 || v >= cod.size)
      fail(errc::invalid_function,
           "table entry " + std::to_string(v) + " outside codomain of size " +
               std::to_string(cod.size));
}

FinFunction identity(FinSet a) {
  std::vector<int> t(a.size);
  std::iota(t.begin(), t.end(), 0);
  return FinFunction(a, a, std::move(t));
}

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.dom)
    fail(errc::codomain_mismatch, "compose: codomain of size " + std::to_string(f.cod.size) +
                                      " does not match domain of size " +
                                      std::to_string(g.dom.size));
  std::vector<int> t(f.table.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = g.table[f.table[k]];
  return FinFunction(f.dom, g.cod, std::move(t));
}

Coproduct coproduct(FinSet a, FinSet b) {
  FinSet sum{a.size + b.size};
  std::vector<int> left(a.size), right(b.size);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), a.size);
  return Coproduct{sum, FinFunction(a, sum, std::move(left)), FinFunction(b, sum, std::move(right))};
}

FinFunction copair(const FinFunction& u, const FinFunction& v) {
  if (u.cod != v.cod) fail(errc::codomain_mismatch, "copair: codomains differ");
  std::vector<int> t;
  t.reserve(u.table.size() + v.table.size());
  t.insert(t.end(), u.table.begin(), u.table.end());
  t.insert(t.end(), v.table.begin(), v.table.end());
  return FinFunction(FinSet{u.dom.size + v.dom.size}, u.cod, std::move(t));
}

FinFunction block_sum(const FinFunction& f, const FinFunction& g) {
  std::vector<int> t;
  t.reserve(f.table.size() + g.table.size());
  t.insert(t.end(), f.table.begin(), f.table.end());
  for (int v : g.table) t.push_back(f.cod.size + v);
  return FinFunction(FinSet{f.dom.size + g.dom.size}, FinSet{f.cod.size + g.cod.size},
                     std::move(t));
}

FinFunction block_swap(FinSet a, FinSet b) {
  std::vector<int> t(a.size + b.size);
  for (int k = 0; k < a.size; ++k) t[k] = b.size + k;
  for (int k = 0; k < b.size; ++k) t[a.size + k] = k;
  return FinFunction(FinSet{a.size + b.size}, FinSet{a.size + b.size}, std::move(t));
}

FinFunction from_empty(FinSet a) { return FinFunction(FinSet{0}, a, {}); }

PushoutResult pushout(const FinFunction& f, const FinFunction& g) {
  if (f.dom != g.dom) fail(errc::domain_mismatch, "pushout: span legs have different domains");
  const int n = f.cod.size;
  const int np = g.cod.size;
  UnionFind uf(n + np);
  for (int y = 0; y < f.dom.size; ++y) uf.unite(f.table[y], n + g.table[y]);

  std::vector<int> quotient(n + np);
  int classes = 0;
  if (g_normalize_pushouts.load(std::memory_order_relaxed)) {
    // Roots are minimal members, so scanning in order numbers classes by
    // minimal representative.
    std::vector<int> index(n + np, -1);
    for (int k = 0; k < n + np; ++k) {
      int r = uf.find(k);
      if (index[r] < 0) index[r] = classes++;
      quotient[k] = index[r];
    }
  } else {
    for (int k = 0; k < n + np; ++k) quotient[k] = uf.find(k);
    classes = n + np;
  }

  FinSet apex{classes};
  std::vector<int> left(quotient.begin(), quotient.begin() + n);
  std::vector<int> right(quotient.begin() + n, quotient.end());
  return PushoutResult{apex, FinFunction(f.cod, apex, std::move(left)),
                       FinFunction(g.cod, apex, std::move(right)),
                       FinFunction(FinSet{n + np}, apex, std::move(quotient))};
}

FinFunction pushout_universal(const PushoutResult& p, const FinFunction& u,
                              const FinFunction& v) {
  if (u.dom != p.left_leg.dom || v.dom != p.right_leg.dom)
    fail(errc::domain_mismatch, "pushout_universal: cocone domains do not match the span feet");
  if (u.cod != v.cod) fail(errc::codomain_mismatch, "pushout_universal: cocone codomains differ");
  const int n = u.dom.size;
  std::vector<int> w(p.apex.size, -1);
  for (int k = 0; k < p.from_coproduct.dom.size; ++k) {
    const int cls = p.from_coproduct.table[k];
    const int val = k < n ? u.table[k] : v.table[k - n];
    if (w[cls] < 0)
      w[cls] = val;
    else if (w[cls] != val)
      fail(errc::not_a_cocone, "pushout_universal: cocone does not commute with the span");
  }
  for (int& entry : w)
    if (entry < 0) entry = 0;  // unreachable classes only arise under the test hook
  return FinFunction(p.apex, u.cod, std::move(w));
}

bool is_bijection(const FinFunction& f) {
  if (f.dom != f.cod) return false;
  std::vector<bool> seen(f.cod.size, false);
  for (int v : f.table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

FinFunction inverse(const FinFunction& f) {
  if (!is_bijection(f)) fail(errc::not_bijective, "inverse: function is not a bijection");
  std::vector<int> t(f.table.size());
  for (std::size_t k = 0; k < f.table.size(); ++k) t[f.table[k]] = static_cast<int>(k);
  return FinFunction(f.cod, f.dom, std::move(t));
}

void set_pushout_normalization_for_testing(bool enabled) {
  g_normalize_pushouts.store(enabled, std::memory_order_relaxed);
}

}  // namespace compnet
