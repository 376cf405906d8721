#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "compnet/vectfield.hpp"

using namespace compnet;

namespace {

Polynomial parse2(std::string_view text) { return Polynomial::parse(text, 2); }

// Independent numeric route for transport: pushforward o evaluate o pullback.
std::vector<Rational> transport_pointwise(const FinFunction& f, const PolyVectorField& v,
                                          const std::vector<Rational>& point) {
  std::vector<Rational> pulled(v.space.size);
  for (int s = 0; s < v.space.size; ++s) pulled[s] = point[f(s)];
  std::vector<Rational> rate = vf_evaluate(v, pulled);
  std::vector<Rational> pushed(f.cod.size, Rational(0));
  for (int s = 0; s < v.space.size; ++s) pushed[f(s)] += rate[s];
  return pushed;
}

std::vector<Rational> sample_point(std::mt19937_64& engine, int dim) {
  std::vector<Rational> point;
  for (int k = 0; k < dim; ++k)
    point.emplace_back(static_cast<long>(engine() % 19) - 9,
                       static_cast<long>(engine() % 4) + 1);
  return point;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rational_parse("3/2") == Rational(3, 2));
  CHECK(rational_parse("1.5") == Rational(3, 2));
  CHECK(rational_parse("-0.25") == Rational(-1, 4));
  CHECK(rational_parse("7") == Rational(7));
  CHECK(rational_str(Rational(3, 2)) == "3/2");
  CHECK(rational_str(Rational(4)) == "4");
  CHECK_THROWS_AS(rational_parse("1/0"), Error);
  CHECK_THROWS_AS(rational_parse("x"), Error);
}

TEST_CASE("polynomial canonical text and parsing") {
  Polynomial p = parse2("3/2 x0^2 x1 - x1 + 1");
  CHECK(p.str() == "3/2*x0^2*x1 - x1 + 1");
  CHECK(Polynomial::parse(p.str(), 2) == p);
  CHECK(parse2("x0 + x0").str() == "2*x0");
  CHECK(parse2("x0 - x0").str() == "0");
  CHECK(parse2("0").is_zero());
  CHECK(parse2("2*x1*x0").str() == "2*x0*x1");
  CHECK(Polynomial::parse("5", 0).str() == "5");
  CHECK_THROWS_AS(parse2("x2"), Error);
  CHECK_THROWS_AS(parse2("1 +"), Error);
  // graded lex: degree first, then lexicographic
  CHECK(parse2("x1 + x0^2").str() == "x0^2 + x1");
  CHECK(parse2("x1^2 + x0*x1").str() == "x0*x1 + x1^2");
}

TEST_CASE("substitution of variables") {
  Polynomial p = parse2("x0*x1");
  FinFunction collapse(FinSet{2}, FinSet{1}, {0, 0});
  CHECK(p.substitute_vars(collapse) == Polynomial::parse("x0^2", 1));
  CHECK(p.substitute_vars(identity(FinSet{2})) == p);
  // degree is preserved by substitution along any map
  Polynomial q = parse2("x0^2*x1 - 2*x0 + 3");
  CHECK(q.substitute_vars(collapse).total_degree() == q.total_degree());
  CHECK_THROWS_AS(p.substitute_vars(FinFunction(FinSet{3}, FinSet{1}, {0, 0, 0})), Error);
}

TEST_CASE("transport collapses by summing components") {
  PolyVectorField v = PolyVectorField::make(FinSet{2}, {parse2("x1"), parse2("x0")});
  CHECK(vf_transport(identity(FinSet{2}), v) == v);

  FinFunction collapse(FinSet{2}, FinSet{1}, {0, 0});
  PolyVectorField moved = vf_transport(collapse, v);
  CHECK(moved == PolyVectorField::make(FinSet{1}, {Polynomial::parse("2*x0", 1)}));

  // numeric oracle at sampled rational points
  std::mt19937_64 engine(99);
  for (int round = 0; round < 20; ++round) {
    auto point = sample_point(engine, 1);
    CHECK(vf_evaluate(moved, point) == transport_pointwise(collapse, v, point));
  }

  // empty preimages produce zero components
  FinFunction skip(FinSet{1}, FinSet{2}, {1});
  PolyVectorField one = PolyVectorField::make(FinSet{1}, {Polynomial::parse("x0^2", 1)});
  PolyVectorField lifted = vf_transport(skip, one);
  CHECK(lifted.components[0].is_zero());
  CHECK(lifted.components[1] == parse2("x1^2"));
}

TEST_CASE("transport functoriality and linearity") {
  std::mt19937_64 engine(3);
  auto rand_fn = [&](int dom, int cod) {
    std::vector<int> t(dom);
    for (int& v : t) v = static_cast<int>(engine() % cod);
    return FinFunction(FinSet{dom}, FinSet{cod}, std::move(t));
  };
  auto rand_poly = [&](int vars) {
    Polynomial p(vars);
    for (int t = 0; t < 3; ++t) {
      std::vector<int> e(vars, 0);
      for (int d = 0; d < static_cast<int>(engine() % 4); ++d) ++e[engine() % vars];
      p.add_term(Monomial{e}, Rational(static_cast<long>(engine() % 7) - 3));
    }
    return p;
  };
  for (int round = 0; round < 50; ++round) {
    const int a = 1 + static_cast<int>(engine() % 3);
    const int b = 1 + static_cast<int>(engine() % 3);
    const int c = 1 + static_cast<int>(engine() % 3);
    FinFunction f = rand_fn(a, b), g = rand_fn(b, c);
    std::vector<Polynomial> comps, comps2;
    for (int k = 0; k < a; ++k) comps.push_back(rand_poly(a));
    for (int k = 0; k < a; ++k) comps2.push_back(rand_poly(a));
    PolyVectorField v = PolyVectorField::make(FinSet{a}, comps);
    PolyVectorField w = PolyVectorField::make(FinSet{a}, comps2);

    CHECK(vf_transport(compose(f, g), v) == vf_transport(g, vf_transport(f, v)));

    // additivity and degree bound
    std::vector<Polynomial> sum_comps;
    for (int k = 0; k < a; ++k) sum_comps.push_back(v.components[k] + w.components[k]);
    PolyVectorField sum = PolyVectorField::make(FinSet{a}, sum_comps);
    PolyVectorField tv = vf_transport(f, v), tw = vf_transport(f, w), ts = vf_transport(f, sum);
    int max_deg_before = 0, max_deg_after = 0;
    for (int k = 0; k < a; ++k) max_deg_before = std::max(max_deg_before, v.components[k].total_degree());
    for (int k = 0; k < b; ++k) {
      CHECK(ts.components[k] == tv.components[k] + tw.components[k]);
      max_deg_after = std::max(max_deg_after, tv.components[k].total_degree());
    }
    CHECK(max_deg_after <= max_deg_before);
  }
}

TEST_CASE("combine blocks") {
  PolyVectorField v = PolyVectorField::make(FinSet{1}, {Polynomial::parse("x0^2", 1)});
  PolyVectorField w = PolyVectorField::make(FinSet{1}, {Polynomial::parse("3*x0", 1)});
  PolyVectorField both = vf_combine(v, w);
  CHECK(both == PolyVectorField::make(FinSet{2}, {parse2("x0^2"), parse2("3*x1")}));
  CHECK(vf_combine(v, vf_unit()) == v);
  CHECK(vf_combine(vf_unit(), v) == v);

  // evaluation splits over the blocks
  std::vector<Rational> point{Rational(2), Rational(5)};
  auto evaluated = vf_evaluate(both, point);
  CHECK(evaluated[0] == vf_evaluate(v, std::vector<Rational>{Rational(2)})[0]);
  CHECK(evaluated[1] == vf_evaluate(w, std::vector<Rational>{Rational(5)})[0]);
}

TEST_CASE("unit field") {
  CHECK(vf_unit().space.size == 0);
  PolyVectorField zero = vf_transport(from_empty(FinSet{3}), vf_unit());
  CHECK(zero.space.size == 3);
  for (const Polynomial& p : zero.components) CHECK(p.is_zero());
}

TEST_CASE("evaluation") {
  PolyVectorField v = PolyVectorField::make(FinSet{2}, {parse2("x1"), parse2("x0")});
  auto out = vf_evaluate(v, std::vector<Rational>{Rational(2), Rational(5)});
  CHECK(out == std::vector<Rational>{Rational(5), Rational(2)});
  PolyVectorField zero = vf_transport(from_empty(FinSet{2}), vf_unit());
  CHECK(vf_evaluate(zero, std::vector<Rational>{Rational(7), Rational(-1)}) ==
        std::vector<Rational>{Rational(0), Rational(0)});
  CHECK_THROWS_AS(vf_evaluate(v, std::vector<Rational>{Rational(1)}), Error);
}

TEST_CASE("euler integration") {
  PolyVectorField zero = vf_transport(from_empty(FinSet{1}), vf_unit());
  auto constant = euler_integrate(zero, {Rational(4)}, Rational(1, 2), 3);
  REQUIRE(constant.size() == 4);
  for (const auto& row : constant) CHECK(row[0] == Rational(4));

  PolyVectorField ones = PolyVectorField::make(FinSet{1}, {Polynomial::constant(1, 1)});
  auto ramp = euler_integrate(ones, {Rational(0)}, Rational(1, 2), 4);
  REQUIRE(ramp.size() == 5);
  CHECK(ramp[1][0] == Rational(1, 2));
  CHECK(ramp[2][0] == Rational(1));
  CHECK(ramp[3][0] == Rational(3, 2));
  CHECK(ramp[4][0] == Rational(2));

  // linear field: Euler reproduces (1+h)^k exactly
  PolyVectorField linear = PolyVectorField::make(FinSet{1}, {Polynomial::parse("x0", 1)});
  Rational h(1, 3);
  auto growth = euler_integrate(linear, {Rational(1)}, h, 6);
  Rational expected(1);
  for (int k = 0; k <= 6; ++k) {
    CHECK(growth[k][0] == expected);
    expected *= (1 + h);
  }
  CHECK_THROWS_AS(euler_integrate(linear, {Rational(1)}, Rational(0), 3), Error);
  CHECK_THROWS_AS(euler_integrate(linear, {Rational(1), Rational(2)}, h, 3), Error);
}
