#include <algorithm>

#include "quintic/error.hpp"
#include "quintic/kronecker.hpp"

namespace quintic {

namespace {

// Forms of one degree e in three variables have a common zero over the algebraic
// closure iff their degree 3e-2 Macaulay matrix is rank deficient.
bool has_common_zero(const std::vector<Form>& forms, Field f) {
  std::vector<Form> nonzero;
  for (const auto& g : forms)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return true;
  const int e = nonzero.front().degree();
  if (e == 0) return false;
  // Reduce to a basis of their span first.
  const Echelon ech = rref(coefficient_matrix(nonzero));
  std::vector<Form> basis;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis.push_back(Form::from_coefficients(f, e, ech.reduced.row(r)));
  if (basis.size() < 3) return true;
  const int d = 3 * e - 2;
  std::vector<Form> products;
  for (const auto& g : basis)
    for (const auto& mono : monomials(d - e)) products.push_back(g * Form::monomial(Scalar::one(f), mono));
  return rank(coefficient_matrix(products)) < monomial_count(d);
}

Form linear_in(const std::array<Scalar, 3>& coeffs, Field f) {
  Form out(f, 1);
  for (int c = 0; c < 3; ++c) {
    Exponent e{0, 0, 0};
    e[c] = 1;
    out += Form::monomial(coeffs[c], e);
  }
  return out.with_degree(1);
}

// Minors of a given size of a matrix of forms.
std::vector<Form> minors_of_size(const FormGrid& m, std::size_t k, Field f) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Form> out;
  std::vector<std::size_t> rs(k), cs(k);
  auto pick_cols = [&](auto&& self, std::size_t i, std::size_t start) -> void {
    if (i == k) {
      FormGrid sub(k, std::vector<Form>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rs[a]][cs[b]];
      out.push_back(determinant(sub, f, int(k)));
      return;
    }
    for (std::size_t c = start; c < cols; ++c) {
      cs[i] = c;
      self(self, i + 1, c + 1);
    }
  };
  auto pick_rows = [&](auto&& self, std::size_t i, std::size_t start) -> void {
    if (i == k) {
      pick_cols(pick_cols, 0, 0);
      return;
    }
    for (std::size_t r = start; r < rows; ++r) {
      rs[i] = r;
      self(self, i + 1, r + 1);
    }
  };
  pick_rows(pick_rows, 0, 0);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m.at(i, j).is_zero()) return false;
      if (i == j && !(m.at(i, i) == m.at(0, 0))) return false;
    }
  return true;
}

// Incremental echelon basis of flattened matrices.
class SpanBuilder {
 public:
  explicit SpanBuilder(Field f) : field_(f) {}
  // Adds v if independent; returns whether it was added.
  bool add(Vector v) {
    for (const auto& [piv, row] : rows_) {
      if (v[piv].is_zero()) continue;
      const Scalar c = v[piv];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!row[k].is_zero()) v[k] -= c * row[k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) return false;
    const std::size_t piv = std::size_t(it - v.begin());
    const Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    for (auto& [p2, row] : rows_) {
      if (row[piv].is_zero()) continue;
      const Scalar c = row[piv];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!v[k].is_zero()) row[k] -= c * v[k];
    }
    rows_.emplace_back(piv, std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  Field field_;
  std::vector<std::pair<std::size_t, Vector>> rows_;
};

// Dimension of the unital algebra generated by gens.
std::size_t algebra_dimension(const std::vector<Matrix>& gens, Field f, std::size_t n) {
  SpanBuilder span(f);
  std::vector<Matrix> frontier{Matrix::identity(f, n)};
  span.add(frontier[0].entries());
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Matrix prod = mat_mul(w, g);
        if (span.add(prod.entries())) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return span.size();
}

using Poly = std::vector<Scalar>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
  trim(a);
  const Scalar inv = m.back().inverse();
  while (a.size() >= m.size()) {
    const Scalar c = a.back() * inv;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, Field f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_mod(std::move(out), m);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, Field f) {
  Poly result{Scalar::one(f)};
  base = poly_mod(std::move(base), m);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, f);
    base = poly_mulmod(base, base, m, f);
    e >>= 1;
  }
  return result;
}

std::size_t poly_gcd_degree(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// A quintic over F_p is irreducible iff it has no factor of degree 1 or 2.
bool irreducible_quintic(const Poly& f, Field fld) {
  const std::uint32_t p = fld.modulus();
  const Poly t{Scalar::zero(fld), Scalar::one(fld)};
  Poly tp = poly_powmod(t, p, f, fld);
  Poly tpp = poly_powmod(tp, p, f, fld);
  for (Poly* frob : {&tp, &tpp}) {
    Poly g = *frob;
    g.resize(std::max<std::size_t>(g.size(), 2), Scalar::zero(fld));
    g[1] -= Scalar::one(fld);
    if (poly_gcd_degree(f, g) > 0) return false;
  }
  return true;
}

// Minimal polynomial of m (monic, low degree first).
Poly minimal_polynomial(const Matrix& m, Field f) {
  const std::size_t n = m.rows();
  std::vector<Vector> powers{Matrix::identity(f, n).entries()};
  Matrix cur = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * m;
    Matrix a(f, n * n, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < n * n; ++r) a.at(r, j) = powers[j][r];
    if (auto sol = solve(a, cur.entries())) {
      Poly out;
      for (const auto& c : *sol) out.push_back(-c);
      out.push_back(Scalar::one(f));
      return out;
    }
    powers.push_back(cur.entries());
  }
  throw DomainError("minimal polynomial exceeds the matrix size");
}

}  // namespace

std::array<bool, 3> forbidden_patterns_3x4(const KroneckerModule& psi) {
  if (psi.rows() != 3 || psi.cols() != 4) throw DomainError("forbidden_patterns_3x4 needs a 3 x 4 module");
  const Field f = psi.field();
  std::array<bool, 3> out{};

  // Zero column: the stacked 9 x 4 coefficient matrix has a kernel.
  Matrix stacked(f, 9, 4);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) stacked.at(3 * c + i, j) = psi.slice(c).at(i, j);
  out[0] = rank(stacked) < 4;

  // 2 x 2 zero block: some r != 0 with [r]_x M_c S = 0 for a 2-dimensional S,
  // i.e. the 9 x 4 matrix K(r) has rank <= 2. Entries are linear in r.
  FormGrid k(9, std::vector<Form>(4));
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  // Rows of the cross-product matrix [r]_x as coefficient triples in (r0, r1, r2).
  const std::array<std::array<std::array<Scalar, 3>, 3>, 3> cross = {{
      {{{zero, zero, zero}, {zero, zero, -one}, {zero, one, zero}}},
      {{{zero, zero, one}, {zero, zero, zero}, {-one, zero, zero}}},
      {{{zero, -one, zero}, {one, zero, zero}, {zero, zero, zero}}},
  }};
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Form entry(f, 1);
        for (std::size_t t = 0; t < 3; ++t) {
          const Scalar& m = psi.slice(c).at(t, j);
          if (m.is_zero()) continue;
          std::array<Scalar, 3> coeffs{cross[i][t][0] * m, cross[i][t][1] * m, cross[i][t][2] * m};
          entry += linear_in(coeffs, f);
        }
        k[3 * c + i][j] = entry.with_degree(1);
      }
  out[1] = has_common_zero(minors_of_size(k, 3, f), f);

  // 1 x 3 zero block: some u != 0 with rank C(u) <= 1, where C(u)[c][j] = sum_i u_i M_c[i][j].
  FormGrid cu(3, std::vector<Form>(4));
  for (int c = 0; c < 3; ++c)
    for (std::size_t j = 0; j < 4; ++j)
      cu[c][j] = linear_in({psi.slice(c).at(0, j), psi.slice(c).at(1, j), psi.slice(c).at(2, j)}, f);
  out[2] = has_common_zero(minors_of_size(cu, 2, f), f);
  return out;
}

bool semistable_3x4(const KroneckerModule& psi) {
  const auto pat = forbidden_patterns_3x4(psi);
  return !pat[0] && !pat[1] && !pat[2];
}

namespace {

// Generators T^-1 M_c for an invertible member T of the net of slices.
std::optional<std::vector<Matrix>> normalized_slices(const KroneckerModule& psi) {
  const Field f = psi.field();
  const std::size_t n = psi.rows();
  // A nonzero quintic cannot vanish on a grid with 7 values per coordinate.
  std::vector<Vector> candidates;
  if (f.is_rational() || f.modulus() >= 7) {
    for (int a = 0; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int c = -3; c <= 3; ++c)
          if (a || b || c) candidates.push_back({Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c)});
  } else {
    candidates = projective_points(f, 3);
  }
  for (const auto& pt : candidates) {
    Matrix t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t.at(i, j) = pt[0] * psi.slice(0).at(i, j) + pt[1] * psi.slice(1).at(i, j) + pt[2] * psi.slice(2).at(i, j);
    if (auto t_inv = inverse(t)) {
      std::vector<Matrix> gens;
      for (int c = 0; c < 3; ++c) gens.push_back(*t_inv * psi.slice(c));
      return gens;
    }
  }
  return std::nullopt;
}

}  // namespace

bool stable_5x5(const KroneckerModule& psi) {
  if (psi.rows() != psi.cols()) throw DomainError("stable_5x5 needs a square module");
  const Field f = psi.field();
  const std::size_t n = psi.rows();
  if (f.is_rational()) {
    // The algebra does not depend on the normalizing slice and its dimension can
    // only drop modulo p, so a full algebra mod p settles the question.
    try {
      const KroneckerModule reduced = psi.reduce(Field::prime(1000003));
      if (auto gens = normalized_slices(reduced); gens && algebra_dimension(*gens, reduced.field(), n) == n * n)
        return true;
    } catch (const DomainError&) {
    }
  }
  const auto gens = normalized_slices(psi);
  if (!gens) throw DomainError("stable_5x5: no invertible slice (determinant vanishes)");
  // Invariant subspaces of the normalized slices are exactly the destabilizing ones.
  const std::size_t dim = algebra_dimension(*gens, f, n);
  if (dim == n * n) return true;
  if (f.is_rational() || dim != n) return false;
  // Over F_p the algebra may instead be the field F_{p^n}, acting irreducibly.
  for (const auto& g : *gens)
    for (const auto& h : *gens)
      if (!(g * h == h * g)) return false;
  for (const auto& g : *gens) {
    if (is_scalar_matrix(g)) continue;
    const Poly mp = minimal_polynomial(g, f);
    return mp.size() == n + 1 && n == 5 && irreducible_quintic(mp, f);
  }
  return false;
}

M53X0Battery m53_x0_battery(const std::vector<Form>& q1, const std::vector<Form>& q2, const std::vector<Form>& l) {
  if (q1.size() != 3 || q2.size() != 3 || l.size() != 3) throw DomainError("m53_x0_battery expects three rows");
  const Field f = l[0].field();
  M53X0Battery out;
  std::vector<Form> lin;
  for (const auto& x : l) lin.push_back(x.with_degree(1));
  out.span_ok = linear_span_dim(lin) >= 2;
  if (!out.span_ok) return out;
  const auto kernel = kernel_basis(coefficient_matrix(lin).transpose());
  if (kernel.empty()) {
    out.quadrics_ok = true;
    return out;
  }
  const Vector& v = kernel[0];
  Form a(f, 2), b(f, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    a += q1[i].scaled(v[i]);
    b += q2[i].scaled(v[i]);
  }
  out.quadrics_ok = linear_span_dim({a.with_degree(2), b.with_degree(2)}) == 2;
  return out;
}

}  // namespace quintic
