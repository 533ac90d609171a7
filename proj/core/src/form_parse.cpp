#include <cctype>
#include <map>

#include "quintic/error.hpp"
#include "quintic/form.hpp"

namespace quintic {

namespace {

// Possibly inhomogeneous polynomial, keyed by degree.
using Poly = std::map<int, Form>;

void accumulate(Poly& p, const Form& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = p.emplace(f.degree(), f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) p.erase(it);
  }
}

class Parser {
 public:
  Parser(std::string_view text, Field f) : text_(text), field_(f) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [d, f] : term()) accumulate(acc, f);
      } else if (accept('-')) {
        for (const auto& [d, f] : term()) accumulate(acc, -f);
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) {
      Poly rhs = unary();
      Poly prod;
      for (const auto& [da, fa] : acc)
        for (const auto& [db, fb] : rhs) accumulate(prod, fa * fb);
      acc = std::move(prod);
    }
    return acc;
  }

  Poly unary() {
    if (accept('-')) {
      Poly p = unary();
      for (auto& [d, f] : p) f = -f;
      return p;
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const mpz_class e = natural();
    if (e > 64) fail("exponent too large");
    Poly acc;
    accumulate(acc, Form::constant(Scalar::one(field_)));
    for (long k = 0; k < e.get_si(); ++k) {
      Poly prod;
      for (const auto& [da, fa] : acc)
        for (const auto& [db, fb] : base) accumulate(prod, fa * fb);
      acc = std::move(prod);
    }
    return acc;
  }

  mpz_class natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    Poly p;
    if (c == '(') {
      ++pos_;
      p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      accumulate(p, Form::variable(field_, c - 'x'));
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num = natural();
      mpz_class den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        den = natural();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      Scalar s;
      try {
        s = Scalar::from_fraction(field_, num, den);
      } catch (const DomainError&) {
        pos_ = start;
        fail("denominator vanishes in " + field_.name());
      }
      accumulate(p, Form::constant(s));
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, Field f, int zero_degree) {
  Parser parser(text, f);
  Poly p = parser.parse();
  if (p.empty()) return Form(f, zero_degree);
  if (p.size() > 1) throw ParseError("expression is not homogeneous", 1, 1);
  return p.begin()->second;
}

}  // namespace quintic
