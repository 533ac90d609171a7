#include <algorithm>

#include "quintic/error.hpp"
#include "quintic/form.hpp"

namespace quintic {

namespace {

// Dense univariate polynomial in y, low degree first; empty means zero.
using UPoly = std::vector<Scalar>;
// Polynomial in x with coefficients in K[y], low x-degree first.
using BPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const UPoly& p) { return int(p.size()) - 1; }
int deg(const BPoly& p) { return int(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b, Field f) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly usub(const UPoly& a, const UPoly& b, Field f) {
  UPoly out(std::max(a.size(), b.size()), Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b, Field f) {
  if (deg(a) < deg(b)) return {{}, a};
  UPoly q(a.size() - b.size() + 1, Scalar::zero(f));
  const Scalar inv = b.back().inverse();
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const Scalar c = a.back() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly p) {
  if (p.empty()) return p;
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b, Field f) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b, f).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

UPoly content(const BPoly& p, Field f) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? umonic(c) : ugcd(g, c, f);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& p, Field f) {
  const UPoly c = content(p, f);
  if (c.size() <= 1) {
    if (c.empty()) return p;
    BPoly out = p;
    for (auto& u : out)
      for (auto& s : u) s /= c[0];
    return out;
  }
  BPoly out;
  out.reserve(p.size());
  for (const auto& u : p) out.push_back(udivmod(u, c, f).first);
  return out;
}

// lc(b)^k * a reduced modulo b in x.
BPoly pseudo_remainder(BPoly a, const BPoly& b, Field f) {
  const UPoly& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const UPoly la = a.back();
    for (auto& c : a) c = umul(c, lb, f);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = usub(a[i + shift], umul(la, b[i], f), f);
    a.pop_back();
    trim(a);
  }
  return a;
}

BPoly bgcd(const BPoly& p, const BPoly& q, Field f) {
  const UPoly cg = ugcd(content(p, f), content(q, f), f);
  BPoly a = primitive_part(p, f);
  BPoly b = primitive_part(q, f);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty() && deg(b) > 0) {
    BPoly r = pseudo_remainder(a, b, f);
    a = std::move(b);
    b = r.empty() ? BPoly{} : primitive_part(r, f);
  }
  BPoly g;
  if (b.empty()) {
    g = a;
  } else {
    g = {UPoly{Scalar::one(f)}};
  }
  for (auto& c : g) c = umul(c, cg, f);
  return g;
}

int z_valuation(const Form& f) {
  int v = f.degree();
  for (const auto& [e, c] : f.terms()) v = std::min(v, e[2]);
  return v;
}

BPoly dehomogenize(const Form& f) {
  const Field fld = f.field();
  BPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (out.size() <= std::size_t(e[0])) out.resize(e[0] + 1);
    UPoly& u = out[e[0]];
    if (u.size() <= std::size_t(e[1])) u.resize(e[1] + 1, Scalar::zero(fld));
    u[e[1]] += c;
  }
  for (auto& u : out) trim(u);
  trim(out);
  return out;
}

Form rehomogenize(const BPoly& p, Field f, int zpower) {
  int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (!p[i][j].is_zero()) total = std::max(total, int(i + j));
  Form out(f, total + zpower);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (!p[i][j].is_zero())
        out += Form::monomial(p[i][j], {int(i), int(j), total - int(i + j) + zpower});
  return out;
}

}  // namespace

Form gcd(const Form& f, const Form& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("gcd across fields");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero forms");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const Field fld = f.field();
  const int vz = std::min(z_valuation(f), z_valuation(g));
  const BPoly h = bgcd(dehomogenize(f), dehomogenize(g), fld);
  return rehomogenize(h, fld, vz).monic();
}

Form gcd(const std::vector<Form>& fs) {
  std::optional<Form> acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    acc = acc ? gcd(*acc, f) : f.monic();
    if (acc->degree() == 0) break;
  }
  if (!acc) throw DomainError("gcd of zero forms");
  return *acc;
}

}  // namespace quintic
