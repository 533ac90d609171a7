#include "quintic/form.hpp"

#include "quintic/error.hpp"

namespace quintic {

namespace {

constexpr int kMaxCachedDegree = 64;

std::vector<std::vector<Exponent>> build_monomial_table() {
  std::vector<std::vector<Exponent>> table(kMaxCachedDegree + 1);
  for (int d = 0; d <= kMaxCachedDegree; ++d) {
    for (int i = d; i >= 0; --i)
      for (int j = d - i; j >= 0; --j) table[d].push_back({i, j, d - i - j});
  }
  return table;
}

Exponent operator+(const Exponent& a, const Exponent& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

std::string monomial_text(const Exponent& e) {
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

const std::vector<Exponent>& monomials(int d) {
  static const std::vector<std::vector<Exponent>> table = build_monomial_table();
  static const std::vector<Exponent> empty;
  if (d < 0) return empty;
  if (d > kMaxCachedDegree) throw DomainError("degree " + std::to_string(d) + " exceeds monomial table");
  return table[d];
}

std::size_t monomial_index(const Exponent& e) {
  const int d = e[0] + e[1] + e[2];
  const std::size_t s = std::size_t(d - e[0]);
  return s * (s + 1) / 2 + (s - std::size_t(e[1]));
}

std::size_t monomial_count(int d) { return d < 0 ? 0 : std::size_t(d + 1) * std::size_t(d + 2) / 2; }

Form Form::constant(const Scalar& c) {
  Form f(c.field(), 0);
  if (!c.is_zero()) f.terms_.emplace(Exponent{0, 0, 0}, c);
  return f;
}

Form Form::variable(Field f, int index) {
  Exponent e{0, 0, 0};
  e.at(index) = 1;
  return monomial(Scalar::one(f), e);
}

Form Form::monomial(const Scalar& c, const Exponent& e) {
  Form f(c.field(), e[0] + e[1] + e[2]);
  if (!c.is_zero()) f.terms_.emplace(e, c);
  return f;
}

Form Form::from_terms(Field f, int degree, const Terms& terms) {
  Form out(f, degree);
  for (const auto& [e, c] : terms) {
    if (e[0] + e[1] + e[2] != degree || e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw DegreeError("term of wrong degree in form of degree " + std::to_string(degree));
    if (!(c.field() == f)) throw FieldMismatch("term coefficient in " + c.field().name());
    if (!c.is_zero()) out.terms_.emplace(e, c);
  }
  return out;
}

Form Form::from_coefficients(Field f, int degree, const Vector& coeffs) {
  const auto& mons = monomials(degree);
  if (coeffs.size() != mons.size()) throw DegreeError("coefficient vector has wrong length");
  Form out(f, degree);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!coeffs[i].is_zero()) out.terms_.emplace(mons[i], coeffs[i]);
  return out;
}

Scalar Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Vector Form::coefficients() const {
  Vector v(monomial_count(degree_), Scalar::zero(field_));
  for (const auto& [e, c] : terms_) v[monomial_index(e)] = c;
  return v;
}

Scalar Form::leading_coefficient() const {
  return terms_.empty() ? Scalar::zero(field_) : terms_.begin()->second;
}

Form Form::with_degree(int d) const {
  if (d == degree_) return *this;
  if (!is_zero()) throw DegreeError("form of degree " + std::to_string(degree_) + " where degree " + std::to_string(d) + " is required");
  return Form(field_, d);
}

Form Form::scaled(const Scalar& c) const {
  if (!(c.field() == field_)) throw FieldMismatch("scaling across fields");
  Form out(field_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Form Form::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Form Form::reduce(Field target) const {
  Form out(target, degree_);
  for (const auto& [e, c] : terms_) {
    Scalar r = c.reduce(target);
    if (!r.is_zero()) out.terms_.emplace(e, r);
  }
  return out;
}

Form Form::substitute(const std::array<Form, 3>& images) const {
  const int e = images[0].degree();
  for (const auto& img : images) {
    if (!(img.field() == field_)) throw FieldMismatch("substitution across fields");
    if (img.degree() != e) throw DegreeError("substitution images must share one degree");
  }
  Form out(field_, degree_ * e);
  if (is_zero()) return out;
  std::array<std::vector<Form>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(Form::constant(Scalar::one(field_)));
    for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  for (const auto& [ex, c] : terms_) {
    out += (powers[0][ex[0]] * powers[1][ex[1]] * powers[2][ex[2]]).scaled(c);
  }
  return out;
}

std::optional<Form> Form::divide_exact(const Form& d) const {
  if (d.is_zero()) throw DomainError("division by the zero form");
  if (!(d.field_ == field_)) throw FieldMismatch("division across fields");
  Form q(field_, degree_ - d.degree_);
  if (is_zero()) return q;
  if (d.degree_ > degree_) return std::nullopt;
  const Exponent& lead = d.terms_.begin()->first;
  const Scalar lead_inv = d.terms_.begin()->second.inverse();
  Form rem = *this;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.begin();
    Exponent shift{e[0] - lead[0], e[1] - lead[1], e[2] - lead[2]};
    if (shift[0] < 0 || shift[1] < 0 || shift[2] < 0) return std::nullopt;
    Form t = Form::monomial(c * lead_inv, shift);
    q += t;
    rem -= t * d;
  }
  return q;
}

Form Form::operator-() const { return scaled(-Scalar::one(field_)); }

Form& Form::operator+=(const Form& o) {
  if (!(o.field_ == field_)) throw FieldMismatch("adding forms over " + field_.name() + " and " + o.field_.name());
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (o.degree_ != degree_) {
    throw DegreeError("adding forms of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Form& a, const Form& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("multiplying forms across fields");
  Form out(a.field_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Scalar c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(ea + eb, c);
      if (!inserted) it->second += c;
    }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string Form::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.is_negative();
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(e);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

Form add(const Form& f, const Form& g) { return f + g; }
Form mul(const Form& f, const Form& g) { return f * g; }
Form scale(const Scalar& c, const Form& f) { return f.scaled(c); }

Matrix coefficient_matrix(const std::vector<Form>& fs) {
  if (fs.empty()) return Matrix();
  const int d = fs.front().degree();
  Matrix m(fs.front().field(), fs.size(), monomial_count(d));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_zero() && fs[i].degree() != d) throw DegreeError("coefficient_matrix on forms of mixed degree");
    if (!(fs[i].field() == m.field())) throw FieldMismatch("forms over different fields");
    for (const auto& [e, c] : fs[i].terms()) m.at(i, monomial_index(e)) = c;
  }
  return m;
}

std::size_t linear_span_dim(const std::vector<Form>& fs) {
  if (fs.empty()) return 0;
  int d = fs.front().degree();
  for (const auto& f : fs)
    if (!f.is_zero()) {
      d = f.degree();
      break;
    }
  std::vector<Form> normalized;
  normalized.reserve(fs.size());
  for (const auto& f : fs) normalized.push_back(f.with_degree(d));
  return rank(coefficient_matrix(normalized));
}

Form reduce_mod_linear(const Form& q, const Form& l) {
  if (l.is_zero() || l.degree() != 1) throw DomainError("reduce_mod_linear needs a nonzero linear form");
  const Field f = q.field();
  std::array<Form, 3> images{Form::variable(f, 0), Form::variable(f, 1), Form::variable(f, 2)};
  for (int v = 0; v < 3; ++v) {
    Exponent ev{0, 0, 0};
    ev[v] = 1;
    Scalar a = l.coefficient(ev);
    if (a.is_zero()) continue;
    Form solved(f, 1);
    for (int w = 0; w < 3; ++w) {
      if (w == v) continue;
      Exponent ew{0, 0, 0};
      ew[w] = 1;
      solved -= Form::monomial(l.coefficient(ew) / a, ew);
    }
    images[v] = solved.with_degree(1);
    break;
  }
  return q.substitute(images);
}

bool divides(const Form& f, const Form& g) {
  if (f.is_zero()) throw DomainError("divides: divisor is the zero form");
  if (g.is_zero()) return true;
  if (f.degree() > g.degree()) return false;
  if (f.degree() == 0) return true;
  if (f.degree() == 1) return reduce_mod_linear(g, f).is_zero();
  return g.divide_exact(f).has_value();
}

}  // namespace quintic
