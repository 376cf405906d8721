#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compnet/decoration.hpp"

namespace compnet {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b", integers and exact decimals ("1.5" -> 3/2).
Rational rational_parse(std::string_view text);
std::string rational_str(const Rational& r);

/// Exponent vector over a fixed variable set.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: first by total degree, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over the
/// variables x0..x{var_count-1}. No zero coefficients are stored; terms are
/// kept in graded lexicographic order.
class Polynomial {
public:
  explicit Polynomial(int var_count = 0) : var_count_(var_count) {}

  static Polynomial constant(int var_count, Rational value);
  static Polynomial variable(int var_count, int index);

  int var_count() const { return var_count_; }
  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // 0 for the zero polynomial

  Polynomial& add_term(Monomial m, const Rational& coeff);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;

  /// Substitution x_t -> x_{f(t)}, producing a polynomial over f.cod.
  Polynomial substitute_vars(const FinFunction& f) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text: terms in descending graded-lex order, e.g.
  /// "3/2*x0^2*x1 - x2 + 1". The zero polynomial prints "0".
  std::string str() const;
  static Polynomial parse(std::string_view text, int var_count);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int var_count_;
  std::map<Monomial, Rational, GrlexLess> terms_;
};

/// Polynomial vector field on R^S: one component per element of S, each a
/// polynomial in the variables indexed by S.
struct PolyVectorField {
  FinSet space;
  std::vector<Polynomial> components;

  static PolyVectorField make(FinSet space, std::vector<Polynomial> components);

  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;
};

/// Pushforward-pullback transport: component at s' sums the components of
/// the f-preimage of s', with every variable x_t replaced by x_{f(t)}.
PolyVectorField vf_transport(const FinFunction& f, const PolyVectorField& v);

/// Block product on R^{S+S'}.
PolyVectorField vf_combine(const PolyVectorField& v, const PolyVectorField& w);

PolyVectorField vf_unit();

std::vector<Rational> vf_evaluate(const PolyVectorField& v, std::span<const Rational> point);

/// Fixed-step Euler iteration in exact rational arithmetic; returns the
/// n+1 points x_0..x_n with x_{k+1} = x_k + step * v(x_k).
std::vector<std::vector<Rational>> euler_integrate(const PolyVectorField& v,
                                                   std::vector<Rational> start,
                                                   const Rational& step, int steps);

struct VectFieldDecoration {
  using Value = PolyVectorField;
  static constexpr std::string_view name() { return "vectfield"; }
  static PolyVectorField transport(const FinFunction& f, const PolyVectorField& v) {
    return vf_transport(f, v);
  }
  static PolyVectorField combine(const PolyVectorField& v, const PolyVectorField& w) {
    return vf_combine(v, w);
  }
  static PolyVectorField unit() { return vf_unit(); }
  static bool equal(const PolyVectorField& a, const PolyVectorField& b) { return a == b; }
  static FinSet carrier(const PolyVectorField& v) { return v.space; }
};

using OpenSystem = DecoratedCospan<VectFieldDecoration>;

}  // namespace compnet
