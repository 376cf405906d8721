#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "compnet/cospan.hpp"

namespace compnet {

/// Backend contract for decorations: a functorial action on values attached
/// to finite sets (transport), a combination map onto the chosen coproduct
/// (combine), a unit value on the empty set and decidable equality on
/// canonical forms. Backends must be pure and deterministic.
template <typename B>
concept DecorationBackend =
    requires(const FinFunction& f, const typename B::Value& v, const typename B::Value& w) {
      typename B::Value;
      { B::transport(f, v) } -> std::same_as<typename B::Value>;
      { B::combine(v, w) } -> std::same_as<typename B::Value>;
      { B::unit() } -> std::same_as<typename B::Value>;
      { B::equal(v, w) } -> std::same_as<bool>;
      { B::carrier(v) } -> std::same_as<FinSet>;
      { B::name() } -> std::convertible_to<std::string_view>;
    };

/// A cospan together with a decoration on its apex.
template <DecorationBackend B>
struct DecoratedCospan {
  Cospan cospan;
  typename B::Value decoration;
};

template <DecorationBackend B>
DecoratedCospan<B> make_decorated(Cospan c, typename B::Value d) {
  if (B::carrier(d) != c.apex)
    fail(errc::decoration_mismatch, "decoration carrier does not match the apex");
  return DecoratedCospan<B>{std::move(c), std::move(d)};
}

/// Composite decoration: combine on the coproduct of the apexes, then
/// transport along the coproduct-to-pushout map.
template <DecorationBackend B>
DecoratedCospan<B> dcompose(const DecoratedCospan<B>& m, const DecoratedCospan<B>& n) {
  auto h = hcompose_with_pushout(m.cospan, n.cospan);
  auto dec = B::transport(h.pushout.from_coproduct, B::combine(m.decoration, n.decoration));
  return DecoratedCospan<B>{std::move(h.cospan), std::move(dec)};
}

template <DecorationBackend B>
DecoratedCospan<B> dtensor(const DecoratedCospan<B>& m, const DecoratedCospan<B>& n) {
  return DecoratedCospan<B>{tensor(m.cospan, n.cospan),
                            B::combine(m.decoration, n.decoration)};
}

/// The decoration obtained by transporting the unit along the unique map
/// out of the empty set.
template <DecorationBackend B>
typename B::Value trivial_decoration(FinSet a) {
  return B::transport(from_empty(a), B::unit());
}

template <DecorationBackend B>
DecoratedCospan<B> didentity(FinSet a) {
  return DecoratedCospan<B>{identity_cospan(a), trivial_decoration<B>(a)};
}

template <DecorationBackend B>
DecoratedCospan<B> dcompanion(const FinFunction& f) {
  return DecoratedCospan<B>{companion(f), trivial_decoration<B>(f.cod)};
}

template <DecorationBackend B>
DecoratedCospan<B> dconjoint(const FinFunction& f) {
  return DecoratedCospan<B>{conjoint(f), trivial_decoration<B>(f.cod)};
}

/// Globular map of decorated cospans: an apex map whose globular squares
/// commute and which transports the source decoration onto the target one.
struct DecoratedMap {
  FinFunction apex_map;
};

template <DecorationBackend B>
std::optional<std::string> decorated_map_diagnose(const DecoratedMap& h,
                                                  const DecoratedCospan<B>& src,
                                                  const DecoratedCospan<B>& tgt) {
  CospanMap cm{src.cospan, tgt.cospan, identity(src.cospan.left_foot), h.apex_map,
               identity(src.cospan.right_foot)};
  if (auto why = cospan_map_diagnose(cm)) return why;
  if (!B::equal(B::transport(h.apex_map, src.decoration), tgt.decoration))
    return "decoration not preserved";
  return std::nullopt;
}

template <DecorationBackend B>
bool check_decorated_map(const DecoratedMap& h, const DecoratedCospan<B>& src,
                         const DecoratedCospan<B>& tgt) {
  return !decorated_map_diagnose(h, src, tgt).has_value();
}

/// The interchanger of the underlying cospans, certified to also transport
/// the composite decorations. A transport failure indicates a backend law
/// violation and surfaces as Error(decoration_mismatch).
template <DecorationBackend B>
DecoratedMap dinterchanger(const DecoratedCospan<B>& m1, const DecoratedCospan<B>& n1,
                           const DecoratedCospan<B>& m2, const DecoratedCospan<B>& n2) {
  GlobularIso x = interchanger(m1.cospan, n1.cospan, m2.cospan, n2.cospan);
  auto lhs = dcompose(dtensor(m1, n1), dtensor(m2, n2));
  auto rhs = dtensor(dcompose(m1, m2), dcompose(n1, n2));
  if (!B::equal(B::transport(x.apex_bijection, lhs.decoration), rhs.decoration))
    fail(errc::decoration_mismatch,
         "interchanger does not transport the composite decoration");
  return DecoratedMap{x.apex_bijection};
}

}  // namespace compnet
