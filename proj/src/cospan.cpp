#include "compnet/cospan.hpp"

#include <string>

namespace compnet {

namespace {

std::string dims(const Cospan& m) {
  return "(" + std::to_string(m.left_foot.size) + "->" + std::to_string(m.apex.size) + "<-" +
         std::to_string(m.right_foot.size) + ")";
}

}  // namespace

Cospan::Cospan(FinSet left, FinSet right, FinSet apx, FinFunction in, FinFunction out)
    : left_foot(left), right_foot(right), apex(apx), in_leg(std::move(in)),
      out_leg(std::move(out)) {
  if (in_leg.dom != left_foot || out_leg.dom != right_foot || in_leg.cod != apex ||
      out_leg.cod != apex)
    fail(errc::invalid_function, "cospan legs do not match feet/apex " + dims(*this));
}

bool CospanMap::globular() const {
  return foot_left == identity(src.left_foot) && foot_right == identity(src.right_foot);
}

GlobularIso::GlobularIso(Cospan src, Cospan tgt, FinFunction bij)
    : source(std::move(src)), target(std::move(tgt)), apex_bijection(std::move(bij)) {
  if (source.left_foot != target.left_foot || source.right_foot != target.right_foot)
    fail(errc::certification_failed, "globular iso: feet differ");
  if (apex_bijection.dom != source.apex || apex_bijection.cod != target.apex ||
      !is_bijection(apex_bijection))
    fail(errc::certification_failed, "globular iso: apex map is not a bijection " +
                                         dims(source) + " -> " + dims(target));
  if (compose(source.in_leg, apex_bijection) != target.in_leg ||
      compose(source.out_leg, apex_bijection) != target.out_leg)
    fail(errc::certification_failed, "globular iso: legs not preserved");
}

GlobularIso GlobularIso::inverted() const {
  return GlobularIso(target, source, inverse(apex_bijection));
}

CospanMap GlobularIso::as_map() const {
  return CospanMap{source, target, identity(source.left_foot), apex_bijection,
                   identity(source.right_foot)};
}

GlobularIso compose_iso(const GlobularIso& first, const GlobularIso& second) {
  if (!(first.target == second.source))
    fail(errc::boundary_mismatch, "compose_iso: middle cospans differ");
  return GlobularIso(first.source, second.target,
                     compose(first.apex_bijection, second.apex_bijection));
}

Cospan identity_cospan(FinSet a) { return Cospan(a, a, a, identity(a), identity(a)); }

HComposeResult hcompose_with_pushout(const Cospan& m, const Cospan& n) {
  if (m.right_foot != n.left_foot)
    fail(errc::foot_mismatch, "hcompose: right foot " + std::to_string(m.right_foot.size) +
                                  " does not match left foot " +
                                  std::to_string(n.left_foot.size));
  PushoutResult p = pushout(m.out_leg, n.in_leg);
  Cospan c(m.left_foot, n.right_foot, p.apex, compose(m.in_leg, p.left_leg),
           compose(n.out_leg, p.right_leg));
  return HComposeResult{std::move(c), std::move(p)};
}

Cospan hcompose(const Cospan& m, const Cospan& n) { return hcompose_with_pushout(m, n).cospan; }

Cospan tensor(const Cospan& m, const Cospan& n) {
  return Cospan(FinSet{m.left_foot.size + n.left_foot.size},
                FinSet{m.right_foot.size + n.right_foot.size},
                FinSet{m.apex.size + n.apex.size}, block_sum(m.in_leg, n.in_leg),
                block_sum(m.out_leg, n.out_leg));
}

GlobularIso associator(const Cospan& m1, const Cospan& m2, const Cospan& m3) {
  // Both association orders are quotients of N1+N2+N3 by the same relation;
  // the associator sends the class of k on the left to the class of k on
  // the right. Collect the two quotient maps and read the bijection off.
  auto left12 = hcompose_with_pushout(m1, m2);
  auto left = hcompose_with_pushout(left12.cospan, m3);
  auto right23 = hcompose_with_pushout(m2, m3);
  auto right = hcompose_with_pushout(m1, right23.cospan);

  const int n1 = m1.apex.size, n2 = m2.apex.size, n3 = m3.apex.size;
  auto quot_left = [&](int k) {
    if (k < n1 + n2) return left.pushout.from_coproduct(left12.pushout.from_coproduct(k));
    return left.pushout.right_leg(k - n1 - n2);
  };
  auto quot_right = [&](int k) {
    if (k < n1) return right.pushout.left_leg(k);
    return right.pushout.right_leg(right23.pushout.from_coproduct(k - n1));
  };

  std::vector<int> bij(left.cospan.apex.size, -1);
  for (int k = 0; k < n1 + n2 + n3; ++k) {
    const int from = quot_left(k), to = quot_right(k);
    if (bij[from] >= 0 && bij[from] != to)
      fail(errc::certification_failed, "associator: quotient maps disagree");
    bij[from] = to;
  }
  for (int v : bij)
    if (v < 0) fail(errc::certification_failed, "associator: quotient map not surjective");
  return GlobularIso(left.cospan, right.cospan,
                     FinFunction(left.cospan.apex, right.cospan.apex, std::move(bij)));
}

GlobularIso left_unitor(const Cospan& m) {
  auto c = hcompose_with_pushout(identity_cospan(m.left_foot), m);
  FinFunction w = pushout_universal(c.pushout, m.in_leg, identity(m.apex));
  return GlobularIso(c.cospan, m, std::move(w));
}

GlobularIso right_unitor(const Cospan& m) {
  auto c = hcompose_with_pushout(m, identity_cospan(m.right_foot));
  FinFunction w = pushout_universal(c.pushout, identity(m.apex), m.out_leg);
  return GlobularIso(c.cospan, m, std::move(w));
}

GlobularIso interchanger(const Cospan& m1, const Cospan& n1, const Cospan& m2,
                         const Cospan& n2) {
  auto lhs = hcompose_with_pushout(tensor(m1, n1), tensor(m2, n2));
  auto pm = hcompose_with_pushout(m1, m2);
  auto pn = hcompose_with_pushout(n1, n2);
  Cospan rhs = tensor(pm.cospan, pn.cospan);

  const int c1 = m1.apex.size, c2 = n1.apex.size;
  const int d1 = m2.apex.size, d2 = n2.apex.size;
  const int shift = pm.cospan.apex.size;

  // Forward: cocone from the tensored span into the coproduct of pushouts.
  std::vector<int> ut(c1 + c2), vt(d1 + d2);
  for (int k = 0; k < c1; ++k) ut[k] = pm.pushout.left_leg(k);
  for (int k = 0; k < c2; ++k) ut[c1 + k] = shift + pn.pushout.left_leg(k);
  for (int k = 0; k < d1; ++k) vt[k] = pm.pushout.right_leg(k);
  for (int k = 0; k < d2; ++k) vt[d1 + k] = shift + pn.pushout.right_leg(k);
  FinFunction forward = pushout_universal(
      lhs.pushout, FinFunction(FinSet{c1 + c2}, rhs.apex, std::move(ut)),
      FinFunction(FinSet{d1 + d2}, rhs.apex, std::move(vt)));

  // Backward: each pushout block maps into the big pushout.
  std::vector<int> u1(c1), v1(d1), u2(c2), v2(d2);
  for (int k = 0; k < c1; ++k) u1[k] = lhs.pushout.left_leg(k);
  for (int k = 0; k < d1; ++k) v1[k] = lhs.pushout.right_leg(k);
  for (int k = 0; k < c2; ++k) u2[k] = lhs.pushout.left_leg(c1 + k);
  for (int k = 0; k < d2; ++k) v2[k] = lhs.pushout.right_leg(d1 + k);
  FinFunction back1 = pushout_universal(pm.pushout,
                                        FinFunction(m1.apex, lhs.cospan.apex, std::move(u1)),
                                        FinFunction(m2.apex, lhs.cospan.apex, std::move(v1)));
  FinFunction back2 = pushout_universal(pn.pushout,
                                        FinFunction(n1.apex, lhs.cospan.apex, std::move(u2)),
                                        FinFunction(n2.apex, lhs.cospan.apex, std::move(v2)));
  FinFunction backward = copair(back1, back2);

  if (compose(forward, backward) != identity(lhs.cospan.apex) ||
      compose(backward, forward) != identity(rhs.apex))
    fail(errc::certification_failed, "interchanger: universal maps are not mutually inverse");
  return GlobularIso(lhs.cospan, rhs, std::move(forward));
}

GlobularIso unit_interchanger(FinSet a, FinSet b) {
  Cospan u = identity_cospan(FinSet{a.size + b.size});
  return GlobularIso(u, tensor(identity_cospan(a), identity_cospan(b)), identity(u.apex));
}

FinFunction braiding_object(FinSet a, FinSet b) { return block_swap(a, b); }

CospanMap braiding_cell(const Cospan& m, const Cospan& n) {
  CospanMap cell{tensor(m, n), tensor(n, m), block_swap(m.left_foot, n.left_foot),
                 block_swap(m.apex, n.apex), block_swap(m.right_foot, n.right_foot)};
  if (auto why = cospan_map_diagnose(cell))
    fail(errc::certification_failed, "braiding cell: " + *why);
  return cell;
}

Cospan companion(const FinFunction& f) {
  return Cospan(f.dom, f.cod, f.cod, f, identity(f.cod));
}

Cospan conjoint(const FinFunction& f) {
  return Cospan(f.cod, f.dom, f.cod, identity(f.cod), f);
}

std::optional<std::string> cospan_map_diagnose(const CospanMap& cm) {
  if (cm.foot_left.dom != cm.src.left_foot || cm.foot_left.cod != cm.tgt.left_foot)
    return "left foot map boundaries do not match";
  if (cm.foot_right.dom != cm.src.right_foot || cm.foot_right.cod != cm.tgt.right_foot)
    return "right foot map boundaries do not match";
  if (cm.apex_map.dom != cm.src.apex || cm.apex_map.cod != cm.tgt.apex)
    return "apex map boundaries do not match";
  if (compose(cm.src.in_leg, cm.apex_map) != compose(cm.foot_left, cm.tgt.in_leg))
    return "input square does not commute";
  if (compose(cm.src.out_leg, cm.apex_map) != compose(cm.foot_right, cm.tgt.out_leg))
    return "output square does not commute";
  return std::nullopt;
}

bool check_cospan_map(const CospanMap& cm) { return !cospan_map_diagnose(cm).has_value(); }

bool check_cospan_map(const CospanMap& cm, const Cospan& src, const Cospan& tgt) {
  return cm.src == src && cm.tgt == tgt && check_cospan_map(cm);
}

CospanMap identity_map(const Cospan& m) {
  return CospanMap{m, m, identity(m.left_foot), identity(m.apex), identity(m.right_foot)};
}

CospanMap unit_map(const FinFunction& f) {
  return CospanMap{identity_cospan(f.dom), identity_cospan(f.cod), f, f, f};
}

CospanMap vcompose(const CospanMap& first, const CospanMap& second) {
  if (!(first.tgt == second.src))
    fail(errc::boundary_mismatch, "vcompose: middle cospans differ");
  return CospanMap{first.src, second.tgt, compose(first.foot_left, second.foot_left),
                   compose(first.apex_map, second.apex_map),
                   compose(first.foot_right, second.foot_right)};
}

CospanMap hcompose_map(const CospanMap& first, const CospanMap& second) {
  if (first.src.right_foot != second.src.left_foot ||
      first.tgt.right_foot != second.tgt.left_foot || first.foot_right != second.foot_left)
    fail(errc::boundary_mismatch, "hcompose_map: middle foot maps do not agree");
  auto src = hcompose_with_pushout(first.src, second.src);
  auto tgt = hcompose_with_pushout(first.tgt, second.tgt);
  FinFunction apex = pushout_universal(src.pushout,
                                       compose(first.apex_map, tgt.pushout.left_leg),
                                       compose(second.apex_map, tgt.pushout.right_leg));
  return CospanMap{src.cospan, tgt.cospan, first.foot_left, std::move(apex),
                   second.foot_right};
}

CospanMap tensor_map(const CospanMap& first, const CospanMap& second) {
  return CospanMap{tensor(first.src, second.src), tensor(first.tgt, second.tgt),
                   block_sum(first.foot_left, second.foot_left),
                   block_sum(first.apex_map, second.apex_map),
                   block_sum(first.foot_right, second.foot_right)};
}

}  // namespace compnet
