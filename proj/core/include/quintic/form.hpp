#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quintic/matrix.hpp"
#include "quintic/scalar.hpp"

namespace quintic {

/// Exponents of X, Y, Z.
using Exponent = std::array<int, 3>;

/// Monomials of degree d in graded-lex order with X > Y > Z; empty for d < 0.
const std::vector<Exponent>& monomials(int d);
/// Position of e inside monomials(e[0]+e[1]+e[2]).
std::size_t monomial_index(const Exponent& e);
/// C(d+2, 2) for d >= 0, else 0.
std::size_t monomial_count(int d);

/// Homogeneous polynomial in X, Y, Z. The zero form keeps a nominal degree,
/// which may be negative.
class Form {
 public:
  /// Terms sorted descending, which for a fixed degree is graded lex X > Y > Z.
  using Terms = std::map<Exponent, Scalar, std::greater<Exponent>>;

  Form() = default;
  Form(Field f, int degree) : field_(f), degree_(degree) {}

  static Form constant(const Scalar& c);
  static Form variable(Field f, int index);
  static Form monomial(const Scalar& c, const Exponent& e);
  static Form from_terms(Field f, int degree, const Terms& terms);
  /// Form whose coefficients in monomials(d) order are `coeffs`.
  static Form from_coefficients(Field f, int degree, const Vector& coeffs);

  Field field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Exponent& e) const;
  /// Coefficients in monomials(degree()) order.
  Vector coefficients() const;
  /// Leading coefficient in graded-lex order; zero for the zero form.
  Scalar leading_coefficient() const;

  /// Same form with nominal degree d; throws DegreeError unless zero or already of degree d.
  Form with_degree(int d) const;
  Form scaled(const Scalar& c) const;
  /// Divided by its leading coefficient.
  Form monic() const;
  Form reduce(Field target) const;
  /// Replace X, Y, Z by the given forms, which must share one degree.
  Form substitute(const std::array<Form, 3>& images) const;
  /// Quotient when `d` divides this form exactly.
  std::optional<Form> divide_exact(const Form& d) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);

  /// Canonical text: graded-lex order, e.g. "x^2 - 3/2*y*z".
  std::string to_string() const;

 private:
  Field field_;
  int degree_ = 0;
  Terms terms_;
};

Form add(const Form& f, const Form& g);
Form mul(const Form& f, const Form& g);
Form scale(const Scalar& c, const Form& f);

/// True iff g = f*h for a homogeneous h. Throws DomainError when f = 0.
bool divides(const Form& f, const Form& g);
/// Monic greatest common divisor. Throws DomainError when both vanish.
Form gcd(const Form& f, const Form& g);
Form gcd(const std::vector<Form>& fs);
/// Rank of the coefficient matrix of fs in the monomial basis of their common degree.
std::size_t linear_span_dim(const std::vector<Form>& fs);
/// Coefficient matrix: one row per form. All forms must share a degree.
Matrix coefficient_matrix(const std::vector<Form>& fs);
/// Substitutes the solved variable of the linear form l (X, then Y, then Z) into q.
Form reduce_mod_linear(const Form& q, const Form& l);

/// Parses the form grammar (x y z, a or a/b literals, + - * ^, parentheses).
/// The result must be homogeneous; a bare zero takes `zero_degree`.
Form parse_form(std::string_view text, Field f, int zero_degree = 0);

}  // namespace quintic
