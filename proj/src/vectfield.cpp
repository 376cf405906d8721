#include "compnet/vectfield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace compnet {

Rational rational_parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) fail(errc::parse_error, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    try {
      boost::multiprecision::cpp_int n{std::string(num)};
      boost::multiprecision::cpp_int d{std::string(den)};
      if (d == 0) fail(errc::parse_error, "zero denominator: " + std::string(text));
      return Rational(n, d);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad rational: " + std::string(text));
    }
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  boost::multiprecision::cpp_int unscaled = 0;
  boost::multiprecision::cpp_int den = 1;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) fail(errc::parse_error, "bad number: " + std::string(text));
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') fail(errc::parse_error, "bad number: " + std::string(text));
    seen_digit = true;
    unscaled = unscaled * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) fail(errc::parse_error, "bad number: " + std::string(text));
  Rational r(unscaled, den);
  return negative ? Rational(-r) : r;
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

Polynomial Polynomial::constant(int var_count, Rational value) {
  Polynomial p(var_count);
  p.add_term(Monomial{std::vector<int>(var_count, 0)}, value);
  return p;
}

Polynomial Polynomial::variable(int var_count, int index) {
  if (index < 0 || index >= var_count)
    fail(errc::index_mismatch, "variable index " + std::to_string(index) + " out of range");
  Polynomial p(var_count);
  std::vector<int> e(var_count, 0);
  e[index] = 1;
  p.add_term(Monomial{std::move(e)}, 1);
  return p;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Polynomial& Polynomial::add_term(Monomial m, const Rational& coeff) {
  if (static_cast<int>(m.exponents.size()) != var_count_)
    fail(errc::index_mismatch, "monomial arity does not match variable count");
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (var_count_ != other.var_count_)
    fail(errc::index_mismatch, "adding polynomials over different variable sets");
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other.scaled(-1);
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out(var_count_);
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, Rational(c * factor));
  return out;
}

Polynomial Polynomial::substitute_vars(const FinFunction& f) const {
  if (f.dom.size != var_count_)
    fail(errc::index_mismatch, "substitution map does not match variable set");
  Polynomial out(f.cod.size);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(f.cod.size, 0);
    for (int t = 0; t < var_count_; ++t) e[f(t)] += m.exponents[t];
    out.add_term(Monomial{std::move(e)}, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != var_count_)
    fail(errc::dimension_mismatch, "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int t = 0; t < var_count_; ++t)
      for (int e = 0; e < m.exponents[t]; ++e) term *= point[t];
    sum += term;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string vars;
    for (int t = 0; t < var_count_; ++t) {
      if (m.exponents[t] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(t);
      if (m.exponents[t] > 1) vars += "^" + std::to_string(m.exponents[t]);
    }
    if (vars.empty()) {
      out << rational_str(mag);
    } else {
      if (mag != 1) out << rational_str(mag) << "*";
      out << vars;
    }
  }
  return out.str();
}

Polynomial Polynomial::parse(std::string_view text, int var_count) {
  Polynomial out(var_count);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) fail(errc::parse_error, "empty polynomial");
  bool any_term = false;
  while (pos < text.size()) {
    skip_ws();
    Rational sign = 1;
    if (any_term) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        fail(errc::parse_error, "expected + or - in polynomial at offset " + std::to_string(pos));
      }
      skip_ws();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
      skip_ws();
    } else if (text[pos] == '+') {
      ++pos;
      skip_ws();
    }
    // one term: optional coefficient, then zero or more variable powers
    Rational coeff = 1;
    bool saw_factor = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '.' || text[pos] == '/'))
        ++pos;
      coeff = rational_parse(text.substr(start, pos - start));
      saw_factor = true;
    }
    std::vector<int> exps(var_count, 0);
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != 'x') break;
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail(errc::parse_error, "variable without index in polynomial");
      int idx = std::stoi(std::string(text.substr(start, pos - start)));
      if (idx < 0 || idx >= var_count)
        fail(errc::parse_error, "variable x" + std::to_string(idx) + " outside arity " +
                                    std::to_string(var_count));
      int exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (estart == pos) fail(errc::parse_error, "missing exponent in polynomial");
        exp = std::stoi(std::string(text.substr(estart, pos - estart)));
      }
      exps[idx] += exp;
      saw_factor = true;
    }
    if (!saw_factor) fail(errc::parse_error, "empty term in polynomial");
    out.add_term(Monomial{std::move(exps)}, Rational(sign * coeff));
    any_term = true;
    skip_ws();
  }
  return out;
}

PolyVectorField PolyVectorField::make(FinSet space, std::vector<Polynomial> components) {
  if (static_cast<int>(components.size()) != space.size)
    fail(errc::dimension_mismatch, "component count does not match space");
  for (const Polynomial& p : components)
    if (p.var_count() != space.size)
      fail(errc::index_mismatch, "component variable set does not match space");
  return PolyVectorField{space, std::move(components)};
}

PolyVectorField vf_transport(const FinFunction& f, const PolyVectorField& v) {
  if (f.dom != v.space) fail(errc::index_mismatch, "transport: map does not match field space");
  std::vector<Polynomial> components(f.cod.size, Polynomial(f.cod.size));
  for (int s = 0; s < v.space.size; ++s)
    components[f(s)] = components[f(s)] + v.components[s].substitute_vars(f);
  return PolyVectorField{f.cod, std::move(components)};
}

PolyVectorField vf_combine(const PolyVectorField& v, const PolyVectorField& w) {
  const int n = v.space.size, m = w.space.size;
  Coproduct cp = coproduct(v.space, w.space);
  std::vector<Polynomial> components;
  components.reserve(n + m);
  for (int s = 0; s < n; ++s) components.push_back(v.components[s].substitute_vars(cp.inj_left));
  for (int s = 0; s < m; ++s) components.push_back(w.components[s].substitute_vars(cp.inj_right));
  return PolyVectorField{cp.set, std::move(components)};
}

PolyVectorField vf_unit() { return PolyVectorField{FinSet{0}, {}}; }

std::vector<Rational> vf_evaluate(const PolyVectorField& v, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != v.space.size)
    fail(errc::dimension_mismatch, "evaluation point has wrong dimension");
  std::vector<Rational> out;
  out.reserve(v.components.size());
  for (const Polynomial& p : v.components) out.push_back(p.evaluate(point));
  return out;
}

std::vector<std::vector<Rational>> euler_integrate(const PolyVectorField& v,
                                                   std::vector<Rational> start,
                                                   const Rational& step, int steps) {
  if (static_cast<int>(start.size()) != v.space.size)
    fail(errc::dimension_mismatch, "start point has wrong dimension");
  if (step <= 0) fail(errc::dimension_mismatch, "step must be positive");
  std::vector<std::vector<Rational>> trajectory;
  trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  trajectory.push_back(start);
  for (int k = 0; k < steps; ++k) {
    std::vector<Rational> rate = vf_evaluate(v, trajectory.back());
    std::vector<Rational> next = trajectory.back();
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += step * rate[i];
    trajectory.push_back(std::move(next));
  }
  return trajectory;
}

}  // namespace compnet
