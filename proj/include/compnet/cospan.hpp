#pragma once

#include <optional>
#include <string>

#include "compnet/finset.hpp"

namespace compnet {

/// A cospan X -> N <- Y of finite sets: a horizontal 1-cell with source
/// foot X, target foot Y and apex N.
struct Cospan {
  FinSet left_foot;
  FinSet right_foot;
  FinSet apex;
  FinFunction in_leg;   // X -> N
  FinFunction out_leg;  // Y -> N

  Cospan() = default;
  Cospan(FinSet left, FinSet right, FinSet apex, FinFunction in, FinFunction out);

  friend bool operator==(const Cospan&, const Cospan&) = default;
};

/// 2-morphism between cospans: a triple (a, phi, c) of maps with two
/// commuting squares. Globular exactly when both foot maps are identities.
struct CospanMap {
  Cospan src;
  Cospan tgt;
  FinFunction foot_left;   // a: src.left_foot -> tgt.left_foot
  FinFunction apex_map;    // phi: src.apex -> tgt.apex
  FinFunction foot_right;  // c: src.right_foot -> tgt.right_foot

  bool globular() const;

  friend bool operator==(const CospanMap&, const CospanMap&) = default;
};

/// Certified globular isomorphism between two parallel cospans. The
/// constructor checks bijectivity and both leg-preservation squares and
/// throws Error(certification_failed) otherwise.
struct GlobularIso {
  Cospan source;
  Cospan target;
  FinFunction apex_bijection;

  GlobularIso(Cospan source, Cospan target, FinFunction bijection);

  GlobularIso inverted() const;
  CospanMap as_map() const;
};

GlobularIso compose_iso(const GlobularIso& first, const GlobularIso& second);

Cospan identity_cospan(FinSet a);

/// Horizontal composition by pushout over the shared foot.
Cospan hcompose(const Cospan& m, const Cospan& n);

/// hcompose together with the pushout it was built from (the decoration
/// layer needs the map from the coproduct of the apexes).
struct HComposeResult {
  Cospan cospan;
  PushoutResult pushout;
};
HComposeResult hcompose_with_pushout(const Cospan& m, const Cospan& n);

/// Tensor by coproduct: block sums of feet, apexes and legs.
Cospan tensor(const Cospan& m, const Cospan& n);

GlobularIso associator(const Cospan& m1, const Cospan& m2, const Cospan& m3);
GlobularIso left_unitor(const Cospan& m);   // U_X (.) m -> m
GlobularIso right_unitor(const Cospan& m);  // m (.) U_Y -> m

/// The interchange iso x: (m1 (x) n1) (.) (m2 (x) n2) -> (m1 (.) m2) (x) (n1 (.) n2),
/// computed by pushout_universal in both directions and verified mutually inverse.
GlobularIso interchanger(const Cospan& m1, const Cospan& n1, const Cospan& m2,
                         const Cospan& n2);

/// u: U_{A+B} -> U_A (x) U_B. Identity on the nose with chosen coproducts.
GlobularIso unit_interchanger(FinSet a, FinSet b);

/// Braiding on objects: the block swap A+B -> B+A.
FinFunction braiding_object(FinSet a, FinSet b);

/// Braiding on horizontal 1-cells: the 2-morphism m (x) n -> n (x) m whose
/// three components are block swaps.
CospanMap braiding_cell(const Cospan& m, const Cospan& n);

Cospan companion(const FinFunction& f);  // f: A -> B <- B: id
Cospan conjoint(const FinFunction& f);   // id: B -> B <- A: f

bool check_cospan_map(const CospanMap& cm);
bool check_cospan_map(const CospanMap& cm, const Cospan& src, const Cospan& tgt);

/// Returns the first failing condition, or nullopt when the map is valid.
std::optional<std::string> cospan_map_diagnose(const CospanMap& cm);

CospanMap identity_map(const Cospan& m);

/// U_f: U_A -> U_B, the unit 2-morphism on a vertical morphism f.
CospanMap unit_map(const FinFunction& f);

/// Vertical composition (componentwise).
CospanMap vcompose(const CospanMap& first, const CospanMap& second);

/// Horizontal composition of 2-morphisms; the apex component is induced by
/// pushout_universal on (left_leg' o apex_1, right_leg' o apex_2).
CospanMap hcompose_map(const CospanMap& first, const CospanMap& second);

/// Tensor of 2-morphisms (componentwise block sums).
CospanMap tensor_map(const CospanMap& first, const CospanMap& second);

}  // namespace compnet
