#include "compnet/circuit.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace compnet {

namespace {

long long pow10ll(int e) {
  long long r = 1;
  while (e-- > 0) r *= 10;
  return r;
}

}  // namespace

Label Label::parse(std::string_view text) {
  if (text.empty()) fail(errc::parse_error, "empty label");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  long long unscaled = 0;
  int scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) fail(errc::parse_error, "label has two decimal points: " + std::string(text));
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9')
      fail(errc::parse_error, "label is not a decimal number: " + std::string(text));
    seen_digit = true;
    if (unscaled > (std::numeric_limits<long long>::max() - 9) / 10)
      fail(errc::parse_error, "label has too many digits: " + std::string(text));
    unscaled = unscaled * 10 + (c - '0');
    if (seen_point) ++scale;
  }
  if (!seen_digit) fail(errc::parse_error, "label has no digits: " + std::string(text));
  Label l{negative ? -unscaled : unscaled, scale};
  while (l.scale > 0 && l.unscaled % 10 == 0) {
    l.unscaled /= 10;
    --l.scale;
  }
  if (l.unscaled == 0) l.scale = 0;
  return l;
}

std::string Label::str() const {
  std::string digits = std::to_string(unscaled < 0 ? -unscaled : unscaled);
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale)
      digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
    digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  }
  return unscaled < 0 ? "-" + digits : digits;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  // Compare a.unscaled / 10^a.scale with b.unscaled / 10^b.scale exactly.
  __int128 lhs = static_cast<__int128>(a.unscaled) * pow10ll(b.scale);
  __int128 rhs = static_cast<__int128>(b.unscaled) * pow10ll(a.scale);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LGraph LGraph::make(int node_count, std::vector<LEdge> edges) {
  if (node_count < 0) fail(errc::invalid_function, "negative node count");
  for (const LEdge& e : edges)
    if (e.src < 0 || e.src >= node_count || e.tgt < 0 || e.tgt >= node_count)
      fail(errc::index_mismatch, "edge endpoint outside node set");
  std::sort(edges.begin(), edges.end());
  return LGraph{node_count, std::move(edges)};
}

LGraph lgraph_transport(const FinFunction& f, const LGraph& g) {
  if (f.dom.size != g.node_count)
    fail(errc::domain_mismatch, "transport: map domain does not match node set");
  std::vector<LEdge> edges;
  edges.reserve(g.edges.size());
  for (const LEdge& e : g.edges) edges.push_back(LEdge{f(e.src), f(e.tgt), e.label});
  return LGraph::make(f.cod.size, std::move(edges));
}

LGraph lgraph_combine(const LGraph& a, const LGraph& b) {
  std::vector<LEdge> edges;
  edges.reserve(a.edges.size() + b.edges.size());
  edges.insert(edges.end(), a.edges.begin(), a.edges.end());
  for (const LEdge& e : b.edges)
    edges.push_back(LEdge{a.node_count + e.src, a.node_count + e.tgt, e.label});
  return LGraph::make(a.node_count + b.node_count, std::move(edges));
}

LGraph lgraph_unit() { return LGraph{}; }

std::string dot_export(const Circuit& c) {
  std::ostringstream out;
  out << "digraph circuit {\n";
  out << "  rankdir=LR;\n";
  for (int k = 0; k < c.decoration.node_count; ++k)
    out << "  n" << k << " [shape=circle, label=\"" << k << "\"];\n";
  for (int k = 0; k < c.cospan.left_foot.size; ++k)
    out << "  x" << k << " [shape=circle, style=filled, fillcolor=gray, label=\"x" << k
        << "\"];\n";
  for (int k = 0; k < c.cospan.right_foot.size; ++k)
    out << "  y" << k << " [shape=circle, style=filled, fillcolor=gray, label=\"y" << k
        << "\"];\n";
  for (int k = 0; k < c.cospan.left_foot.size; ++k)
    out << "  x" << k << " -> n" << c.cospan.in_leg(k) << " [color=gray];\n";
  for (int k = 0; k < c.cospan.right_foot.size; ++k)
    out << "  y" << k << " -> n" << c.cospan.out_leg(k) << " [color=gray];\n";
  for (const LEdge& e : c.decoration.edges)
    out << "  n" << e.src << " -> n" << e.tgt << " [label=\"" << e.label.str() << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace compnet
