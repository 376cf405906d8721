#include "compnet/laws.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "compnet/decoration.hpp"

namespace compnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic across platforms: raw mt19937_64 output reduced by modulo,
// never the implementation-defined standard distributions.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int upto(int n) {  // 0..n-1
    return n <= 0 ? 0 : static_cast<int>(engine() % static_cast<std::uint64_t>(n));
  }
  int size(int max) { return upto(max + 1); }  // 0..max
  int nonzero_size(int max) { return 1 + upto(max); }
  bool coin() { return (engine() & 1u) != 0; }
};

using CaseFn = std::function<std::optional<std::string>(int index, Rng& rng, std::string& repro)>;

LawReport run_cases(std::string law, int count, std::uint64_t seed, RunMode mode,
                    const CaseFn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<LawFailure>> slots(static_cast<std::size_t>(count));
  auto run_one = [&](int i) {
    Rng rng(splitmix64(seed ^ (0x51ed2701u + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL)));
    std::string repro;
    try {
      if (auto msg = fn(i, rng, repro)) slots[i] = LawFailure{i, *msg, repro};
    } catch (const Error& e) {
      slots[i] = LawFailure{i, std::string(e.code()) + ": " + e.what(), repro};
    } catch (const std::exception& e) {
      slots[i] = LawFailure{i, e.what(), repro};
    }
  };
  if (mode == RunMode::Parallel) {
#ifdef COMPNET_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < count; ++i) run_one(i);
  } else {
    for (int i = 0; i < count; ++i) run_one(i);
  }
  LawReport report;
  report.law = std::move(law);
  report.cases_run = count;
  for (auto& slot : slots)
    if (slot) report.failures.push_back(std::move(*slot));
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

// ---------------------------------------------------------------- generators

FinFunction rand_fn(Rng& rng, FinSet dom, FinSet cod) {
  std::vector<int> t(dom.size);
  for (int& v : t) v = rng.upto(cod.size);
  return FinFunction(dom, cod, std::move(t));
}

FinFunction rand_perm(Rng& rng, FinSet a) {
  std::vector<int> t(a.size);
  for (int k = 0; k < a.size; ++k) t[k] = k;
  for (int k = a.size - 1; k > 0; --k) std::swap(t[k], t[rng.upto(k + 1)]);
  return FinFunction(a, a, std::move(t));
}

Cospan rand_cospan(Rng& rng, FinSet left, FinSet right, int max_apex) {
  const int min_apex = (left.size > 0 || right.size > 0) ? 1 : 0;
  FinSet apex{min_apex + rng.upto(max_apex - min_apex + 1)};
  return Cospan(left, right, apex, rand_fn(rng, left, apex), rand_fn(rng, right, apex));
}

std::vector<Cospan> rand_chain(Rng& rng, int count, int max) {
  std::vector<FinSet> feet(static_cast<std::size_t>(count) + 1);
  for (auto& f : feet) f = FinSet{rng.size(max)};
  std::vector<Cospan> chain;
  chain.reserve(count);
  for (int i = 0; i < count; ++i) chain.push_back(rand_cospan(rng, feet[i], feet[i + 1], max));
  return chain;
}

// A valid 2-morphism out of src with prescribed bijective foot maps: the
// apex map is free and the target legs are forced through the inverses.
CospanMap rand_square(Rng& rng, const Cospan& src, const FinFunction& foot_left,
                      const FinFunction& foot_right, int max_apex) {
  const int min_apex = (src.left_foot.size > 0 || src.right_foot.size > 0 || src.apex.size > 0)
                           ? 1
                           : 0;
  FinSet tgt_apex{min_apex + rng.upto(max_apex - min_apex + 1)};
  FinFunction phi = rand_fn(rng, src.apex, tgt_apex);
  Cospan tgt(foot_left.cod, foot_right.cod, tgt_apex,
             compose(inverse(foot_left), compose(src.in_leg, phi)),
             compose(inverse(foot_right), compose(src.out_leg, phi)));
  return CospanMap{src, tgt, foot_left, phi, foot_right};
}

CospanMap rand_globular_square(Rng& rng, const Cospan& src, int max_apex) {
  return rand_square(rng, src, identity(src.left_foot), identity(src.right_foot), max_apex);
}

std::string fn_repr(const FinFunction& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.table.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(f.table[k]);
  }
  return s + "]";
}

std::string cospan_repr(const Cospan& m) {
  return "cospan(|X|=" + std::to_string(m.left_foot.size) +
         ",|Y|=" + std::to_string(m.right_foot.size) + ",|N|=" + std::to_string(m.apex.size) +
         ",i=" + fn_repr(m.in_leg) + ",o=" + fn_repr(m.out_leg) + ")";
}

std::string chain_repr(const std::vector<Cospan>& chain) {
  std::string s;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) s += " ; ";
    s += cospan_repr(chain[k]);
  }
  return s;
}

// ------------------------------------------------- pseudo double category

std::optional<std::string> pseudo_double_category_case(Rng& rng, const CaseGenerator& gen,
                                                       std::string& repro) {
  const int max = gen.max_set_size;
  auto chain = rand_chain(rng, 4, max);
  const Cospan &m1 = chain[0], &m2 = chain[1], &m3 = chain[2], &m4 = chain[3];
  repro = chain_repr(chain);

  // associators and unitors certify bijectivity/globularity on construction
  GlobularIso a123 = associator(m1, m2, m3);
  if (!check_cospan_map(a123.as_map())) return "associator is not a valid 2-morphism";
  GlobularIso lu = left_unitor(m1), ru = right_unitor(m1);
  if (!check_cospan_map(lu.as_map()) || !check_cospan_map(ru.as_map()))
    return "unitor is not a valid 2-morphism";

  // pentagon
  CospanMap p1 =
      vcompose(vcompose(hcompose_map(a123.as_map(), identity_map(m4)),
                        associator(m1, hcompose(m2, m3), m4).as_map()),
               hcompose_map(identity_map(m1), associator(m2, m3, m4).as_map()));
  CospanMap p2 = vcompose(associator(hcompose(m1, m2), m3, m4).as_map(),
                          associator(m1, m2, hcompose(m3, m4)).as_map());
  if (!(p1 == p2)) return "pentagon equation failed";

  // triangle
  Cospan u = identity_cospan(m1.right_foot);
  CospanMap t1 = vcompose(associator(m1, u, m2).as_map(),
                          hcompose_map(identity_map(m1), left_unitor(m2).as_map()));
  CospanMap t2 = hcompose_map(right_unitor(m1).as_map(), identity_map(m2));
  if (!(t1 == t2)) return "triangle equation failed";

  // naturality of the associator against a composable triple of squares
  FinFunction b0 = rand_perm(rng, m1.left_foot), b1 = rand_perm(rng, m1.right_foot);
  FinFunction b2 = rand_perm(rng, m2.right_foot), b3 = rand_perm(rng, m3.right_foot);
  CospanMap s1 = rand_square(rng, m1, b0, b1, max);
  CospanMap s2 = rand_square(rng, m2, b1, b2, max);
  CospanMap s3 = rand_square(rng, m3, b2, b3, max);
  CospanMap nat_l = vcompose(hcompose_map(hcompose_map(s1, s2), s3),
                             associator(s1.tgt, s2.tgt, s3.tgt).as_map());
  CospanMap nat_r = vcompose(a123.as_map(), hcompose_map(s1, hcompose_map(s2, s3)));
  if (!(nat_l == nat_r)) return "associator naturality failed";

  // naturality of the unitors against a single square
  CospanMap lu_l = vcompose(hcompose_map(unit_map(b0), s1), left_unitor(s1.tgt).as_map());
  CospanMap lu_r = vcompose(left_unitor(m1).as_map(), s1);
  if (!(lu_l == lu_r)) return "left unitor naturality failed";
  CospanMap ru_l = vcompose(hcompose_map(s1, unit_map(b1)), right_unitor(s1.tgt).as_map());
  CospanMap ru_r = vcompose(right_unitor(m1).as_map(), s1);
  if (!(ru_l == ru_r)) return "right unitor naturality failed";

  // strict vertical category: associativity and units
  CospanMap v1 = rand_globular_square(rng, m1, max);
  CospanMap v2 = rand_globular_square(rng, v1.tgt, max);
  CospanMap v3 = rand_globular_square(rng, v2.tgt, max);
  if (!(vcompose(vcompose(v1, v2), v3) == vcompose(v1, vcompose(v2, v3))))
    return "vertical composition is not associative";
  if (!(vcompose(identity_map(m1), v1) == v1) || !(vcompose(v1, identity_map(v1.tgt)) == v1))
    return "vertical identities are not units";

  // interchange of vertical and horizontal composition on a 2x2 grid
  CospanMap g11 = rand_square(rng, m1, b0, b1, max);
  CospanMap g12 = rand_square(rng, m2, b1, b2, max);
  CospanMap g21 = rand_square(rng, g11.tgt, rand_perm(rng, g11.tgt.left_foot),
                              rand_perm(rng, g11.tgt.right_foot), max);
  CospanMap g22 = rand_square(rng, g12.tgt, g21.foot_right,
                              rand_perm(rng, g12.tgt.right_foot), max);
  CospanMap grid_l = vcompose(hcompose_map(g11, g12), hcompose_map(g21, g22));
  CospanMap grid_r = hcompose_map(vcompose(g11, g21), vcompose(g12, g22));
  if (!(grid_l == grid_r)) return "horizontal/vertical interchange failed";

  return std::nullopt;
}

// ------------------------------------------------------ monoidal structure

std::optional<std::string> monoidal_case(Rng& rng, const CaseGenerator& gen,
                                         std::string& repro) {
  const int max = gen.max_set_size;
  auto ms = rand_chain(rng, 3, max);
  auto ns = rand_chain(rng, 3, max);
  auto ps = rand_chain(rng, 2, max);
  repro = chain_repr(ms) + " | " + chain_repr(ns) + " | " + chain_repr(ps);

  const Cospan &m1 = ms[0], &m2 = ms[1], &m3 = ms[2];
  const Cospan &n1 = ns[0], &n2 = ns[1], &n3 = ns[2];
  Cospan t1 = tensor(m1, n1), t2 = tensor(m2, n2), t3 = tensor(m3, n3);

  // interchanger certifies (bijective, globular, mutually inverse)
  GlobularIso x12 = interchanger(m1, n1, m2, n2);
  if (!check_cospan_map(x12.as_map())) return "interchanger is not a valid 2-morphism";

  // item 4, interchanger vs associators
  CospanMap hex_l =
      vcompose(vcompose(hcompose_map(x12.as_map(), identity_map(t3)),
                        interchanger(hcompose(m1, m2), hcompose(n1, n2), m3, n3).as_map()),
               tensor_map(associator(m1, m2, m3).as_map(), associator(n1, n2, n3).as_map()));
  CospanMap hex_r =
      vcompose(vcompose(associator(t1, t2, t3).as_map(),
                        hcompose_map(identity_map(t1), interchanger(m2, n2, m3, n3).as_map())),
               interchanger(m1, n1, hcompose(m2, m3), hcompose(n2, n3)).as_map());
  if (!(hex_l == hex_r)) return "interchanger/associator hexagon failed";

  // item 4, right unitor square: rho_{m (x) n} through u and x
  {
    Cospan t = tensor(m1, n1);
    FinSet b = m1.right_foot, d = n1.right_foot;
    CospanMap path =
        vcompose(vcompose(hcompose_map(identity_map(t), unit_interchanger(b, d).as_map()),
                          interchanger(m1, n1, identity_cospan(b), identity_cospan(d)).as_map()),
                 tensor_map(right_unitor(m1).as_map(), right_unitor(n1).as_map()));
    if (!(path == right_unitor(t).as_map())) return "interchanger/right-unitor square failed";
  }

  // item 4, left unitor square
  {
    Cospan t = tensor(m1, n1);
    FinSet a = m1.left_foot, c = n1.left_foot;
    CospanMap path =
        vcompose(vcompose(hcompose_map(unit_interchanger(a, c).as_map(), identity_map(t)),
                          interchanger(identity_cospan(a), identity_cospan(c), m1, n1).as_map()),
                 tensor_map(left_unitor(m1).as_map(), left_unitor(n1).as_map()));
    if (!(path == left_unitor(t).as_map())) return "interchanger/left-unitor square failed";
  }

  // item 5, interchanger vs the (strict) tensor associativity
  {
    const Cospan &p1 = ps[0], &p2 = ps[1];
    CospanMap path1 =
        vcompose(interchanger(tensor(m1, n1), p1, tensor(m2, n2), p2).as_map(),
                 tensor_map(x12.as_map(), identity_map(hcompose(p1, p2))));
    CospanMap path2 =
        vcompose(interchanger(m1, tensor(n1, p1), m2, tensor(n2, p2)).as_map(),
                 tensor_map(identity_map(hcompose(m1, m2)),
                            interchanger(n1, p1, n2, p2).as_map()));
    if (!(path1 == path2)) return "interchanger/tensor-associativity square failed";
  }

  // item 5, unit square: strict on the nose with chosen coproducts
  {
    FinSet a{rng.size(max)}, b{rng.size(max)}, c{rng.size(max)};
    FinSet ab{a.size + b.size}, bc{b.size + c.size}, abc{a.size + b.size + c.size};
    CospanMap path1 = vcompose(unit_interchanger(ab, c).as_map(),
                               tensor_map(unit_interchanger(a, b).as_map(),
                                          identity_map(identity_cospan(c))));
    CospanMap path2 = vcompose(unit_interchanger(a, bc).as_map(),
                               tensor_map(identity_map(identity_cospan(a)),
                                          unit_interchanger(b, c).as_map()));
    if (!(path1 == path2) || !(path1 == identity_map(identity_cospan(abc))))
      return "unit interchanger coherence failed";
  }

  // item 6, tensoring with the unit object
  {
    Cospan u0 = identity_cospan(FinSet{0});
    Cospan mn = hcompose(m1, m2);
    CospanMap path = vcompose(interchanger(m1, u0, m2, u0).as_map(),
                              tensor_map(identity_map(mn), left_unitor(u0).as_map()));
    if (!(path == identity_map(mn))) return "unit-object right square failed";
    CospanMap path2 = vcompose(interchanger(u0, m1, u0, m2).as_map(),
                               tensor_map(right_unitor(u0).as_map(), identity_map(mn)));
    if (!(path2 == identity_map(mn))) return "unit-object left square failed";
    if (!(unit_interchanger(m1.left_foot, FinSet{0}).as_map() ==
          identity_map(identity_cospan(m1.left_foot))))
      return "unit-object interchanger is not the identity";
  }

  // naturality of the interchanger against a 2x2 grid of squares
  {
    FinFunction a0 = rand_perm(rng, m1.left_foot), a1 = rand_perm(rng, m1.right_foot);
    FinFunction a2 = rand_perm(rng, m2.right_foot);
    FinFunction c0 = rand_perm(rng, n1.left_foot), c1 = rand_perm(rng, n1.right_foot);
    FinFunction c2 = rand_perm(rng, n2.right_foot);
    CospanMap sm1 = rand_square(rng, m1, a0, a1, max);
    CospanMap sm2 = rand_square(rng, m2, a1, a2, max);
    CospanMap sn1 = rand_square(rng, n1, c0, c1, max);
    CospanMap sn2 = rand_square(rng, n2, c1, c2, max);
    CospanMap nat_l = vcompose(hcompose_map(tensor_map(sm1, sn1), tensor_map(sm2, sn2)),
                               interchanger(sm1.tgt, sn1.tgt, sm2.tgt, sn2.tgt).as_map());
    CospanMap nat_r =
        vcompose(x12.as_map(), tensor_map(hcompose_map(sm1, sm2), hcompose_map(sn1, sn2)));
    if (!(nat_l == nat_r)) return "interchanger naturality failed";
  }

  return std::nullopt;
}

// ---------------------------------------------------------------- symmetry

std::optional<std::string> symmetry_case(Rng& rng, const CaseGenerator& gen,
                                         std::string& repro) {
  const int max = gen.max_set_size;
  auto ms = rand_chain(rng, 2, max);
  auto ns = rand_chain(rng, 2, max);
  const Cospan &m1 = ms[0], &m2 = ms[1], &n1 = ns[0], &n2 = ns[1];
  Cospan p = rand_cospan(rng, FinSet{rng.size(max)}, FinSet{rng.size(max)}, max);
  repro = chain_repr(ms) + " | " + chain_repr(ns) + " | " + cospan_repr(p);

  // braiding on objects: symmetry, naturality, strict hexagons
  {
    FinSet a{rng.size(max)}, b{rng.size(max)}, c{rng.size(max)};
    if (!(compose(braiding_object(a, b), braiding_object(b, a)) ==
          identity(FinSet{a.size + b.size})))
      return "object braiding is not symmetric";
    FinFunction f = rand_fn(rng, a, FinSet{rng.nonzero_size(max)});
    FinFunction g = rand_fn(rng, b, FinSet{rng.nonzero_size(max)});
    if (!(compose(block_sum(f, g), braiding_object(f.cod, g.cod)) ==
          compose(braiding_object(a, b), block_sum(g, f))))
      return "object braiding naturality failed";
    FinFunction hex1 = compose(block_sum(braiding_object(a, b), identity(c)),
                               block_sum(identity(b), braiding_object(a, c)));
    if (!(hex1 == braiding_object(a, FinSet{b.size + c.size})))
      return "object braiding hexagon (right) failed";
    FinFunction hex2 = compose(block_sum(identity(a), braiding_object(b, c)),
                               block_sum(braiding_object(a, c), identity(b)));
    if (!(hex2 == braiding_object(FinSet{a.size + b.size}, c)))
      return "object braiding hexagon (left) failed";
  }

  // braiding cells: validity, symmetry, S/T strictness
  CospanMap cell = braiding_cell(m1, n1);
  if (!check_cospan_map(cell)) return "braiding cell is not a valid 2-morphism";
  if (!(cell.foot_left == braiding_object(m1.left_foot, n1.left_foot)) ||
      !(cell.foot_right == braiding_object(m1.right_foot, n1.right_foot)))
    return "source/target of the braiding cell are not the object braiding";
  if (!(vcompose(cell, braiding_cell(n1, m1)) == identity_map(tensor(m1, n1))))
    return "braiding cells are not symmetric";

  // hexagon at the cell level (strict tensor associativity)
  {
    CospanMap hex = vcompose(tensor_map(braiding_cell(m1, n1), identity_map(p)),
                             tensor_map(identity_map(n1), braiding_cell(m1, p)));
    if (!(hex == braiding_cell(m1, tensor(n1, p)))) return "cell braiding hexagon failed";
  }

  // braiding vs interchanger (item 9, first square)
  {
    CospanMap path_a = vcompose(interchanger(m1, n1, m2, n2).as_map(),
                                braiding_cell(hcompose(m1, m2), hcompose(n1, n2)));
    CospanMap path_b = vcompose(hcompose_map(braiding_cell(m1, n1), braiding_cell(m2, n2)),
                                interchanger(n1, m1, n2, m2).as_map());
    if (!(path_a == path_b)) return "braiding/interchanger square failed";
  }

  // braiding vs unit interchanger (item 9, second square)
  {
    FinSet a{rng.size(max)}, b{rng.size(max)};
    if (!(braiding_cell(identity_cospan(a), identity_cospan(b)) ==
          unit_map(braiding_object(a, b))))
      return "braiding/unit square failed";
  }

  // naturality of the braiding cell
  {
    FinFunction a0 = rand_perm(rng, m1.left_foot), a1 = rand_perm(rng, m1.right_foot);
    FinFunction c0 = rand_perm(rng, n1.left_foot), c1 = rand_perm(rng, n1.right_foot);
    CospanMap sm = rand_square(rng, m1, a0, a1, max);
    CospanMap sn = rand_square(rng, n1, c0, c1, max);
    CospanMap nat_l = vcompose(tensor_map(sm, sn), braiding_cell(sm.tgt, sn.tgt));
    CospanMap nat_r = vcompose(braiding_cell(m1, n1), tensor_map(sn, sm));
    if (!(nat_l == nat_r)) return "braiding cell naturality failed";
  }

  return std::nullopt;
}

// ---------------------------------------------------------------- fibrancy

struct CompanionCells {
  Cospan hat;
  CospanMap eps;  // hat -> U_B over (f, id)
  CospanMap eta;  // U_A -> hat over (id, f)
};

CompanionCells companion_cells(const FinFunction& f) {
  Cospan hat = companion(f);
  CospanMap eps{hat, identity_cospan(f.cod), f, identity(f.cod), identity(f.cod)};
  CospanMap eta{identity_cospan(f.dom), hat, identity(f.dom), f, f};
  return CompanionCells{std::move(hat), std::move(eps), std::move(eta)};
}

struct ConjointCells {
  Cospan check;
  CospanMap eta;  // U_A -> check over (f, id)
  CospanMap eps;  // check -> U_B over (id, f)
};

ConjointCells conjoint_cells(const FinFunction& f) {
  Cospan chk = conjoint(f);
  CospanMap eta{identity_cospan(f.dom), chk, f, f, identity(f.dom)};
  CospanMap eps{chk, identity_cospan(f.cod), identity(f.cod), identity(f.cod), f};
  return ConjointCells{std::move(chk), std::move(eta), std::move(eps)};
}

std::optional<std::string> companion_equations(const FinFunction& f) {
  auto cc = companion_cells(f);
  if (!check_cospan_map(cc.eps) || !check_cospan_map(cc.eta))
    return "companion structure cells are not valid 2-morphisms";
  if (!(vcompose(cc.eta, cc.eps) == unit_map(f)))
    return "companion equation (vertical) failed";
  CospanMap horizontal = vcompose(hcompose_map(cc.eta, cc.eps), right_unitor(cc.hat).as_map());
  if (!(horizontal == left_unitor(cc.hat).as_map()))
    return "companion equation (horizontal) failed";

  auto jc = conjoint_cells(f);
  if (!check_cospan_map(jc.eps) || !check_cospan_map(jc.eta))
    return "conjoint structure cells are not valid 2-morphisms";
  if (!(vcompose(jc.eta, jc.eps) == unit_map(f)))
    return "conjoint equation (vertical) failed";
  CospanMap horizontal2 = vcompose(hcompose_map(jc.eps, jc.eta), left_unitor(jc.check).as_map());
  if (!(horizontal2 == right_unitor(jc.check).as_map()))
    return "conjoint equation (horizontal) failed";
  return std::nullopt;
}

template <DecorationBackend B>
std::optional<std::string> decorated_cell_ok(const CospanMap& cell,
                                             const typename B::Value& src_dec,
                                             const typename B::Value& tgt_dec) {
  if (!check_cospan_map(cell)) return "decorated cell squares do not commute";
  if (!B::equal(B::transport(cell.apex_map, src_dec), tgt_dec))
    return "decorated cell does not preserve the decoration";
  return std::nullopt;
}

template <DecorationBackend B>
std::optional<std::string> decorated_companion_equations(const FinFunction& f) {
  auto cc = companion_cells(f);
  auto jc = conjoint_cells(f);
  DecoratedCospan<B> dhat = dcompanion<B>(f);
  DecoratedCospan<B> dchk = dconjoint<B>(f);
  DecoratedCospan<B> ua = didentity<B>(f.dom), ub = didentity<B>(f.cod);
  if (auto why = decorated_cell_ok<B>(cc.eps, dhat.decoration, ub.decoration)) return why;
  if (auto why = decorated_cell_ok<B>(cc.eta, ua.decoration, dhat.decoration)) return why;
  if (auto why = decorated_cell_ok<B>(jc.eta, ua.decoration, dchk.decoration)) return why;
  if (auto why = decorated_cell_ok<B>(jc.eps, dchk.decoration, ub.decoration)) return why;
  // the composite cells of the two companion equations preserve decorations
  DecoratedCospan<B> lhs = dcompose(ua, dhat);
  if (auto why = decorated_cell_ok<B>(hcompose_map(cc.eta, cc.eps), lhs.decoration,
                                      dcompose(dhat, ub).decoration))
    return why;
  DecoratedCospan<B> lhs2 = dcompose(dchk, ua);
  if (auto why = decorated_cell_ok<B>(hcompose_map(jc.eps, jc.eta), lhs2.decoration,
                                      dcompose(ub, dchk).decoration))
    return why;
  return std::nullopt;
}

LawReport fibrancy_report(const CaseGenerator& gen, RunMode mode) {
  const int max = std::min(gen.max_set_size, 3);
  std::vector<FinFunction> all;
  for (int a = 0; a <= max; ++a)
    for (int b = 0; b <= max; ++b) {
      if (a > 0 && b == 0) continue;
      std::vector<int> t(a, 0);
      for (;;) {
        all.emplace_back(FinSet{a}, FinSet{b}, t);
        int k = 0;
        while (k < a && ++t[k] == b) t[k++] = 0;
        if (k == a) break;
      }
    }
  CaseFn fn = [&all](int i, Rng&, std::string& repro) -> std::optional<std::string> {
    const FinFunction& f = all[static_cast<std::size_t>(i)];
    repro = "f: " + std::to_string(f.dom.size) + "->" + std::to_string(f.cod.size) + " " +
            fn_repr(f);
    if (auto why = companion_equations(f)) return why;
    if (auto why = decorated_companion_equations<CircuitDecoration>(f)) return why;
    if (auto why = decorated_companion_equations<VectFieldDecoration>(f)) return why;
    return std::nullopt;
  };
  return run_cases("fibrancy", static_cast<int>(all.size()), gen.seed, mode, fn);
}

// ---------------------------------------------------- decoration backends

Label rand_label(Rng& rng) {
  static const char* alphabet[] = {"0.1", "0.2", "0.3", "0.5", "1", "1.5", "2"};
  return Label::parse(alphabet[rng.upto(7)]);
}

LGraph rand_lgraph(Rng& rng, FinSet nodes, int max_edges) {
  if (nodes.size == 0) return lgraph_unit();
  const int count = rng.size(max_edges);
  std::vector<LEdge> edges;
  edges.reserve(count);
  for (int k = 0; k < count; ++k)
    edges.push_back(LEdge{rng.upto(nodes.size), rng.upto(nodes.size), rand_label(rng)});
  return LGraph::make(nodes.size, std::move(edges));
}

Polynomial rand_poly(Rng& rng, int vars, int max_degree) {
  Polynomial p(vars);
  const int terms = rng.size(3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(vars, 0);
    if (vars > 0) {
      const int degree = rng.size(max_degree);
      for (int d = 0; d < degree; ++d) ++exps[rng.upto(vars)];
    }
    const int numer = rng.upto(7) - 3;
    if (numer == 0) continue;
    p.add_term(Monomial{std::move(exps)}, Rational(numer, 1 + rng.upto(2)));
  }
  return p;
}

PolyVectorField rand_vf(Rng& rng, FinSet space, int max_degree) {
  std::vector<Polynomial> components;
  components.reserve(space.size);
  for (int s = 0; s < space.size; ++s) components.push_back(rand_poly(rng, space.size, max_degree));
  return PolyVectorField{space, std::move(components)};
}

template <DecorationBackend B>
struct BackendGen;

template <>
struct BackendGen<CircuitDecoration> {
  static LGraph random(Rng& rng, FinSet carrier, const CaseGenerator& gen) {
    return rand_lgraph(rng, carrier, gen.max_edges);
  }
  static std::optional<LGraph> mutate(Rng& rng, const LGraph& g) {
    if (g.node_count == 0) return std::nullopt;
    auto edges = g.edges;
    edges.push_back(LEdge{rng.upto(g.node_count), rng.upto(g.node_count),
                          Label::parse("9.9")});
    return LGraph::make(g.node_count, std::move(edges));
  }
  static std::string repr(const LGraph& g) {
    std::string s = "graph(nodes=" + std::to_string(g.node_count) + ",edges=[";
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (k) s += ",";
      s += "(" + std::to_string(g.edges[k].src) + "," + std::to_string(g.edges[k].tgt) + "," +
           g.edges[k].label.str() + ")";
    }
    return s + "])";
  }
};

template <>
struct BackendGen<VectFieldDecoration> {
  static PolyVectorField random(Rng& rng, FinSet carrier, const CaseGenerator& gen) {
    return rand_vf(rng, carrier, gen.max_degree);
  }
  static std::optional<PolyVectorField> mutate(Rng&, const PolyVectorField& v) {
    if (v.space.size == 0) return std::nullopt;
    auto components = v.components;
    components[0] = components[0] + Polynomial::constant(v.space.size, 1);
    return PolyVectorField{v.space, std::move(components)};
  }
  static std::string repr(const PolyVectorField& v) {
    std::string s = "field(dim=" + std::to_string(v.space.size) + ",[";
    for (std::size_t k = 0; k < v.components.size(); ++k) {
      if (k) s += "; ";
      s += v.components[k].str();
    }
    return s + "])";
  }
};

template <DecorationBackend B>
DecoratedCospan<B> rand_decorated(Rng& rng, const Cospan& c, const CaseGenerator& gen) {
  return DecoratedCospan<B>{c, BackendGen<B>::random(rng, c.apex, gen)};
}

template <DecorationBackend B>
std::optional<std::string> decoration_functor_case(Rng& rng, const CaseGenerator& gen,
                                                   std::string& repro) {
  const int max = gen.max_set_size;

  // the five backend laws on raw values
  FinSet a{rng.size(max)}, b{rng.size(max)}, c{rng.size(max)};
  auto da = BackendGen<B>::random(rng, a, gen);
  auto db = BackendGen<B>::random(rng, b, gen);
  auto dc = BackendGen<B>::random(rng, c, gen);
  repro = BackendGen<B>::repr(da) + " | " + BackendGen<B>::repr(db) + " | " +
          BackendGen<B>::repr(dc);
  FinFunction f = rand_fn(rng, a, FinSet{rng.nonzero_size(max)});
  FinFunction g = rand_fn(rng, f.cod, FinSet{rng.nonzero_size(max)});
  if (!B::equal(B::transport(identity(a), da), da)) return "transport along id changed the value";
  if (!B::equal(B::transport(compose(f, g), da), B::transport(g, B::transport(f, da))))
    return "transport functoriality failed";
  FinFunction fb = rand_fn(rng, b, FinSet{rng.nonzero_size(max)});
  if (!B::equal(B::transport(block_sum(f, fb), B::combine(da, db)),
                B::combine(B::transport(f, da), B::transport(fb, db))))
    return "combine naturality failed";
  if (!B::equal(B::combine(B::combine(da, db), dc), B::combine(da, B::combine(db, dc))))
    return "combine associativity failed";
  if (!B::equal(B::combine(da, B::unit()), da) || !B::equal(B::combine(B::unit(), da), da))
    return "combine unitality failed";
  if (!B::equal(B::transport(block_swap(a, b), B::combine(da, db)), B::combine(db, da)))
    return "combine symmetry failed";

  // decorated coherence layer
  auto chain = rand_chain(rng, 3, max);
  auto dm1 = rand_decorated<B>(rng, chain[0], gen);
  auto dm2 = rand_decorated<B>(rng, chain[1], gen);
  auto dm3 = rand_decorated<B>(rng, chain[2], gen);
  repro += " | " + chain_repr(chain);

  auto left = dcompose(dcompose(dm1, dm2), dm3);
  auto right = dcompose(dm1, dcompose(dm2, dm3));
  GlobularIso assoc = associator(chain[0], chain[1], chain[2]);
  if (!(left.cospan == assoc.source) || !(right.cospan == assoc.target))
    return "dcompose does not track hcompose";
  if (!B::equal(B::transport(assoc.apex_bijection, left.decoration), right.decoration))
    return "associator does not transport the composite decoration";

  auto lu = left_unitor(chain[0]);
  if (!B::equal(B::transport(lu.apex_bijection,
                             dcompose(didentity<B>(chain[0].left_foot), dm1).decoration),
                dm1.decoration))
    return "left unitor does not transport the decoration";
  auto ru = right_unitor(chain[0]);
  if (!B::equal(B::transport(ru.apex_bijection,
                             dcompose(dm1, didentity<B>(chain[0].right_foot)).decoration),
                dm1.decoration))
    return "right unitor does not transport the decoration";

  // braiding transport
  auto dt = dtensor(dm1, dm2);
  if (!(dt.cospan == tensor(chain[0], chain[1]))) return "dtensor does not track tensor";
  if (!B::equal(B::transport(block_swap(chain[0].apex, chain[1].apex), dt.decoration),
                dtensor(dm2, dm1).decoration))
    return "braiding does not transport the tensor decoration";

  // interchanger transport, using a parallel composable pair
  auto ns = rand_chain(rng, 2, max);
  auto dn1 = rand_decorated<B>(rng, ns[0], gen);
  auto dn2 = rand_decorated<B>(rng, ns[1], gen);
  DecoratedMap x = dinterchanger(dm1, dn1, dm2, dn2);
  auto lhs = dcompose(dtensor(dm1, dn1), dtensor(dm2, dn2));
  auto rhs = dtensor(dcompose(dm1, dm2), dcompose(dn1, dn2));
  if (!check_decorated_map(x, lhs, rhs)) return "dinterchanger is not a valid decorated map";

  // 2-morphism decision procedure: relabeling passes, a mutation fails
  {
    FinFunction h = rand_perm(rng, chain[0].apex);
    Cospan relabeled(chain[0].left_foot, chain[0].right_foot, chain[0].apex,
                     compose(chain[0].in_leg, h), compose(chain[0].out_leg, h));
    auto tgt = DecoratedCospan<B>{relabeled, B::transport(h, dm1.decoration)};
    if (!check_decorated_map(DecoratedMap{h}, dm1, tgt))
      return "valid decorated relabeling rejected";
    if (auto mutated = BackendGen<B>::mutate(rng, tgt.decoration)) {
      auto bad = DecoratedCospan<B>{relabeled, *mutated};
      if (check_decorated_map(DecoratedMap{h}, dm1, bad))
        return "mutated decoration accepted";
    }
  }

  return std::nullopt;
}

// ----------------------------------------------------------- pushout oracle

// Independent of the union-find path: boolean-matrix transitive closure.
std::vector<int> closure_quotient(const FinFunction& f, const FinFunction& g) {
  const int n = f.cod.size, np = g.cod.size, total = n + np;
  std::vector<std::vector<bool>> related(total, std::vector<bool>(total, false));
  for (int k = 0; k < total; ++k) related[k][k] = true;
  for (int y = 0; y < f.dom.size; ++y) {
    related[f(y)][n + g(y)] = true;
    related[n + g(y)][f(y)] = true;
  }
  for (int mid = 0; mid < total; ++mid)
    for (int x = 0; x < total; ++x)
      for (int y = 0; y < total; ++y)
        if (related[x][mid] && related[mid][y]) related[x][y] = true;
  std::vector<int> cls(total, -1);
  int next = 0;
  for (int k = 0; k < total; ++k) {
    if (cls[k] >= 0) continue;
    for (int j = k; j < total; ++j)
      if (related[k][j]) cls[j] = next;
    ++next;
  }
  return cls;
}

std::optional<std::string> compare_pushout_with_oracle(const FinFunction& f,
                                                       const FinFunction& g) {
  PushoutResult p = pushout(f, g);
  std::vector<int> expected = closure_quotient(f, g);
  int classes = expected.empty() ? 0 : 1 + *std::max_element(expected.begin(), expected.end());
  if (p.apex.size != classes) return "apex size disagrees with the closure oracle";
  if (p.from_coproduct.table != expected) return "quotient table disagrees with the oracle";
  const int n = f.cod.size;
  for (int k = 0; k < n; ++k)
    if (p.left_leg(k) != expected[k]) return "left leg disagrees with the oracle";
  for (int k = 0; k < g.cod.size; ++k)
    if (p.right_leg(k) != expected[n + k]) return "right leg disagrees with the oracle";
  for (int y = 0; y < f.dom.size; ++y)
    if (p.left_leg(f(y)) != p.right_leg(g(y))) return "legs do not coequalize the span";
  return std::nullopt;
}

}  // namespace

LawReport check_pseudo_double_category(const CaseGenerator& gen, RunMode mode) {
  CaseFn fn = [&gen](int, Rng& rng, std::string& repro) {
    return pseudo_double_category_case(rng, gen, repro);
  };
  return run_cases("pseudo_double_category", gen.case_count, gen.seed, mode, fn);
}

LawReport check_monoidal_structure(const CaseGenerator& gen, RunMode mode) {
  CaseFn fn = [&gen](int, Rng& rng, std::string& repro) {
    return monoidal_case(rng, gen, repro);
  };
  return run_cases("monoidal_structure", gen.case_count, gen.seed, mode, fn);
}

LawReport check_symmetry(const CaseGenerator& gen, RunMode mode) {
  CaseFn fn = [&gen](int, Rng& rng, std::string& repro) {
    return symmetry_case(rng, gen, repro);
  };
  return run_cases("symmetry", gen.case_count, gen.seed, mode, fn);
}

LawReport check_fibrancy(const CaseGenerator& gen, RunMode mode) {
  return fibrancy_report(gen, mode);
}

LawReport check_decoration_functor_circuit(const CaseGenerator& gen, RunMode mode) {
  CaseFn fn = [&gen](int, Rng& rng, std::string& repro) {
    return decoration_functor_case<CircuitDecoration>(rng, gen, repro);
  };
  return run_cases("decoration_circuit", gen.case_count, gen.seed, mode, fn);
}

LawReport check_decoration_functor_vectfield(const CaseGenerator& gen, RunMode mode) {
  CaseGenerator bounded = gen;
  bounded.max_set_size = std::min(gen.max_set_size, 3);
  CaseFn fn = [bounded](int, Rng& rng, std::string& repro) {
    return decoration_functor_case<VectFieldDecoration>(rng, bounded, repro);
  };
  return run_cases("decoration_vectfield", bounded.case_count, bounded.seed, mode, fn);
}

LawReport pushout_oracle(int max_size, RunMode mode) {
  struct SpanCase {
    FinFunction f, g;
  };
  std::vector<SpanCase> cases;
  for (int y = 0; y <= max_size; ++y)
    for (int n = 0; n <= max_size; ++n)
      for (int np = 0; np <= max_size; ++np) {
        if (y > 0 && (n == 0 || np == 0)) continue;
        std::vector<std::vector<int>> fs, gs;
        std::vector<int> t(y, 0);
        for (;;) {
          fs.push_back(t);
          int k = 0;
          while (k < y && ++t[k] == n) t[k++] = 0;
          if (k == y) break;
        }
        t.assign(y, 0);
        for (;;) {
          gs.push_back(t);
          int k = 0;
          while (k < y && ++t[k] == np) t[k++] = 0;
          if (k == y) break;
        }
        for (const auto& ft : fs)
          for (const auto& gt : gs)
            cases.push_back(SpanCase{FinFunction(FinSet{y}, FinSet{n}, ft),
                                     FinFunction(FinSet{y}, FinSet{np}, gt)});
      }
  CaseFn fn = [&cases](int i, Rng&, std::string& repro) {
    const auto& sc = cases[static_cast<std::size_t>(i)];
    repro = "f: " + std::to_string(sc.f.dom.size) + "->" + std::to_string(sc.f.cod.size) + " " +
            fn_repr(sc.f) + ", g: ->" + std::to_string(sc.g.cod.size) + " " + fn_repr(sc.g);
    return compare_pushout_with_oracle(sc.f, sc.g);
  };
  return run_cases("pushout_oracle", static_cast<int>(cases.size()), 0, mode, fn);
}

LawReport pushout_spot_checks(const CaseGenerator& gen, RunMode mode) {
  CaseFn fn = [&gen](int, Rng& rng, std::string& repro) {
    const int max = std::max(gen.max_set_size, 5);
    FinSet y{rng.size(max)};
    FinSet n{y.size > 0 ? rng.nonzero_size(max) : rng.size(max)};
    FinSet np{y.size > 0 ? rng.nonzero_size(max) : rng.size(max)};
    FinFunction f = rand_fn(rng, y, n), g = rand_fn(rng, y, np);
    repro = "f: " + fn_repr(f) + ", g: " + fn_repr(g);
    return compare_pushout_with_oracle(f, g);
  };
  return run_cases("pushout_spot_checks", gen.case_count, gen.seed, mode, fn);
}

std::vector<LawReport> run_all_laws(const CaseGenerator& gen, RunMode mode) {
  std::vector<LawReport> reports;
  reports.push_back(pushout_oracle(3, mode));
  reports.push_back(check_pseudo_double_category(gen, mode));
  reports.push_back(check_monoidal_structure(gen, mode));
  reports.push_back(check_symmetry(gen, mode));
  reports.push_back(check_fibrancy(gen, mode));
  CaseGenerator circuit_gen = gen;
  circuit_gen.case_count = std::max(1, gen.case_count / 2);
  reports.push_back(check_decoration_functor_circuit(circuit_gen, mode));
  CaseGenerator vf_gen = gen;
  vf_gen.case_count = std::max(1, 3 * gen.case_count / 10);
  reports.push_back(check_decoration_functor_vectfield(vf_gen, mode));
  return reports;
}

}  // namespace compnet
