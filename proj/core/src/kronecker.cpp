#include "quintic/kronecker.hpp"

#include <algorithm>

#include "quintic/error.hpp"

namespace quintic {

namespace detail {

// Calls visit(basis) for every q-dimensional subspace of F_p^n, basis in reduced
// row echelon form. Stops early when visit returns false.
template <class Visit>
bool for_each_subspace(std::uint32_t p, int n, int q, Visit&& visit) {
  std::vector<int> pivots(q);
  std::vector<std::vector<std::uint32_t>> basis(q, std::vector<std::uint32_t>(n, 0));
  auto with_pivots = [&]() -> bool {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < q; ++i) {
      std::fill(basis[i].begin(), basis[i].end(), 0u);
      basis[i][pivots[i]] = 1;
      for (int j = pivots[i] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
    }
    for (;;) {
      if (!visit(basis)) return false;
      std::size_t k = 0;
      for (; k < free.size(); ++k) {
        auto& v = basis[free[k].first][free[k].second];
        if (++v < p) break;
        v = 0;
      }
      if (k == free.size()) return true;
    }
  };
  auto rec = [&](auto&& self, int i, int start) -> bool {
    if (i == q) return with_pivots();
    for (int c = start; c <= n - (q - i); ++c) {
      pivots[i] = c;
      if (!self(self, i + 1, c + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return std::uint32_t(result);
}

// Rank of the given vectors over F_p, stopping once it reaches `cap`.
std::size_t rank_mod(std::vector<std::vector<std::uint32_t>>& vecs, std::uint32_t p, std::size_t cap) {
  std::size_t r = 0;
  const std::size_t len = vecs.empty() ? 0 : vecs[0].size();
  for (std::size_t col = 0; col < len && r < vecs.size() && r < cap; ++col) {
    std::size_t piv = r;
    while (piv < vecs.size() && vecs[piv][col] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[r], vecs[piv]);
    const std::uint64_t inv = inv_mod(vecs[r][col], p);
    for (std::size_t k = r + 1; k < vecs.size(); ++k) {
      if (vecs[k][col] == 0) continue;
      const std::uint64_t factor = vecs[k][col] * inv % p;
      for (std::size_t c = col; c < len; ++c)
        vecs[k][c] = std::uint32_t((vecs[k][c] + (p - factor) * vecs[r][c]) % p);
    }
    ++r;
  }
  return r;
}

Vector to_vector(Field f, const std::vector<std::uint32_t>& v) {
  Vector out;
  for (auto x : v) out.push_back(Scalar::from_int(f, long(x)));
  return out;
}

KingVerdict king_over_prime(const KroneckerModule& psi, const KingOptions& opts) {
  const Field f = psi.field();
  const std::uint32_t p = f.modulus();
  const int a = int(psi.cols());
  const int b = int(psi.rows());
  std::uint64_t total = 0;
  for (int q = 1; q <= a; ++q) total += grassmannian_size(p, a, q);
  if (total > opts.budget)
    throw DomainError("king_semistable: " + std::to_string(total) + " subspaces exceed the budget of " +
                      std::to_string(opts.budget));

  // cols[c][j] = column j of slice c as residues.
  std::array<std::vector<std::vector<std::uint32_t>>, 3> cols;
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < a; ++j) {
      std::vector<std::uint32_t> v(b);
      for (int i = 0; i < b; ++i) v[i] = psi.slice(c).at(i, j).residue();
      cols[c].push_back(std::move(v));
    }

  KingVerdict verdict;
  verdict.semistable = verdict.stable = true;
  verdict.primes = {p};
  std::optional<DestabilizingWitness> weak, strict;
  std::vector<std::vector<std::uint32_t>> images;
  for (int q = 1; q <= a && !weak; ++q) {
    // Smallest support that satisfies the strict inequality.
    const std::size_t threshold = q == a ? std::size_t(b) : std::size_t(b * q / a + 1);
    detail::for_each_subspace(p, a, q, [&](const std::vector<std::vector<std::uint32_t>>& basis) {
      images.clear();
      for (int c = 0; c < 3; ++c)
        for (const auto& s : basis) {
          std::vector<std::uint64_t> acc(b, 0);
          for (int j = 0; j < a; ++j)
            if (s[j])
              for (int i = 0; i < b; ++i) acc[i] += std::uint64_t(s[j]) * cols[c][j][i];
          std::vector<std::uint32_t> w(b);
          for (int i = 0; i < b; ++i) w[i] = std::uint32_t(acc[i] % p);
          images.push_back(std::move(w));
        }
      const std::size_t r = rank_mod(images, p, threshold);
      if (r >= threshold) return true;
      DestabilizingWitness w;
      for (const auto& s : basis) w.column_subspace.push_back(to_vector(f, s));
      w.row_support_dim = r;
      if (r * std::size_t(a) < std::size_t(b * q)) {
        weak = std::move(w);
        return false;
      }
      if (!strict) strict = std::move(w);
      return true;
    });
  }
  if (weak) {
    verdict.semistable = verdict.stable = false;
    verdict.witness = std::move(weak);
  } else if (strict) {
    verdict.stable = false;
    verdict.witness = std::move(strict);
  }
  return verdict;
}

}  // namespace

KroneckerModule::KroneckerModule(Field f, FormGrid entries) : field_(f), entries_(std::move(entries)) {
  rows_ = entries_.size();
  cols_ = rows_ ? entries_[0].size() : 0;
  for (auto& s : slices_) s = Matrix(f, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (entries_[i].size() != cols_) throw DegreeError("ragged Kronecker module");
    for (std::size_t j = 0; j < cols_; ++j) {
      Form& e = entries_[i][j];
      if (!(e.field() == f)) throw FieldMismatch("Kronecker entry over " + e.field().name());
      if (e.is_zero()) {
        e = Form(f, 1);
        continue;
      }
      if (e.degree() != 1) throw DegreeError("Kronecker module entries must be linear");
      for (int c = 0; c < 3; ++c) {
        Exponent ex{0, 0, 0};
        ex[c] = 1;
        slices_[c].at(i, j) = e.coefficient(ex);
      }
    }
  }
}

KroneckerModule KroneckerModule::reduce(Field target) const {
  FormGrid e = entries_;
  for (auto& row : e)
    for (auto& x : row) x = x.reduce(target);
  return KroneckerModule(target, std::move(e));
}

std::size_t row_support_dim(const KroneckerModule& psi, const std::vector<Vector>& subspace) {
  if (subspace.empty()) return 0;
  Matrix m(psi.field(), psi.rows(), 3 * subspace.size());
  std::size_t col = 0;
  for (int c = 0; c < 3; ++c)
    for (const auto& s : subspace) {
      const Vector w = psi.slice(c).apply(s);
      for (std::size_t i = 0; i < w.size(); ++i) m.at(i, col) = w[i];
      ++col;
    }
  return rank(m);
}

std::uint64_t grassmannian_size(std::uint32_t p, int n, int q) {
  if (q < 0 || q > n) return 0;
  mpz_class num = 1, den = 1, pp = p;
  for (int i = 0; i < q; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), pp.get_mpz_t(), unsigned(n - i));
    mpz_pow_ui(b.get_mpz_t(), pp.get_mpz_t(), unsigned(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  mpz_class r = num / den;
  if (!r.fits_ulong_p()) return UINT64_MAX;
  return r.get_ui();
}

KingVerdict king_semistable(const KroneckerModule& psi, const KingOptions& opts) {
  if (psi.cols() == 0) return KingVerdict{true, true, std::nullopt, false, {}};
  if (!psi.field().is_rational()) return king_over_prime(psi, opts);

  KingVerdict out;
  std::optional<DestabilizingWitness> weak, strict;
  for (std::uint32_t p = 5; int(out.primes.size()) < opts.prime_count && p < 1000; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t total = 0;
    for (int q = 1; q <= int(psi.cols()); ++q) total += grassmannian_size(p, int(psi.cols()), q);
    if (total > opts.budget) break;
    KroneckerModule reduced;
    try {
      reduced = psi.reduce(Field::prime(p));
    } catch (const DomainError&) {
      continue;
    }
    KingVerdict v = king_over_prime(reduced, opts);
    out.primes.push_back(p);
    // Semistability and stability modulo p both lift to Q.
    out.semistable = out.semistable || v.semistable;
    out.stable = out.stable || v.stable;
    if (!v.semistable && !weak) weak = v.witness;
    if (v.semistable && !v.stable && !strict) strict = v.witness;
  }
  if (out.primes.empty()) throw DomainError("king_semistable: no prime fits the enumeration budget");
  if (!out.semistable) out.witness = weak;
  else if (!out.stable) out.witness = strict;
  out.probabilistic = !out.stable;
  return out;
}

bool king_stable(const KroneckerModule& psi, const KingOptions& opts) { return king_semistable(psi, opts).stable; }

KernelTwist kernel_twist(const KroneckerModule& psi) {
  if (psi.rows() != 3 || psi.cols() != 4) throw DomainError("kernel_twist needs a 3 x 4 module");
  const Field f = psi.field();
  std::vector<Form> minors = maximal_minors(psi.entries(), f);
  if (std::all_of(minors.begin(), minors.end(), [](const Form& m) { return m.is_zero(); }))
    throw DomainError("kernel_twist: generic rank is below 3");
  KernelTwist out;
  out.g = gcd(minors);
  for (const auto& m : minors) {
    if (m.is_zero()) {
      out.eta.push_back(Form(f, 3 - out.g.degree()));
      continue;
    }
    out.eta.push_back(*m.divide_exact(out.g));
  }
  out.d = 2 + 3 - out.g.degree();
  for (std::size_t r = 0; r < 3; ++r) {
    Form acc(f, 1 + 3 - out.g.degree());
    for (std::size_t i = 0; i < 4; ++i) acc += psi.entries()[r][i] * out.eta[i];
    if (!acc.is_zero()) throw DomainError("kernel_twist: psi * eta does not vanish");
  }
  return out;
}

MinorsProfile minors_profile(const FormGrid& block, Field f) {
  const auto minors = maximal_minors(block, f);
  MinorsProfile out;
  out.span_dim = linear_span_dim(minors);
  if (out.span_dim > 0) {
    out.gcd = gcd(minors);
    if (out.gcd->degree() == 1) out.common_linear_factor = out.gcd;
  }
  return out;
}

std::vector<Vector> projective_points(Field f, int n) {
  if (f.is_rational()) throw DomainError("projective_points needs a prime field");
  std::vector<Vector> out;
  detail::for_each_subspace(f.modulus(), n, 1, [&](const std::vector<std::vector<std::uint32_t>>& basis) {
    out.push_back(to_vector(f, basis[0]));
    return true;
  });
  return out;
}

bool m53_x0_forbidden_by_enumeration(const std::vector<Form>& q1, const std::vector<Form>& q2,
                                     const std::vector<Form>& l) {
  const Field f = l.at(0).field();
  if (f.is_rational()) throw DomainError("enumeration oracle needs a prime field");
  auto combine = [&](const std::vector<Form>& col, const Vector& v, int degree) {
    Form acc(f, degree);
    for (std::size_t i = 0; i < 3; ++i) acc += col[i].scaled(v[i]);
    return acc;
  };
  // Two independent row combinations killing the linear column.
  bool found = !detail::for_each_subspace(f.modulus(), 3, 2, [&](const std::vector<std::vector<std::uint32_t>>& basis) {
    for (const auto& w : basis)
      if (!combine(l, to_vector(f, w), 1).is_zero()) return true;
    return false;
  });
  if (found) return true;
  const auto pts = projective_points(f, 3);
  const auto line = projective_points(f, 2);
  for (const auto& v : pts) {
    if (!combine(l, v, 1).is_zero()) continue;
    const Form a = combine(q1, v, 2), b = combine(q2, v, 2);
    for (const auto& w : line)
      if ((a.scaled(w[0]) + b.scaled(w[1])).is_zero()) return true;
  }
  return false;
}

}  // namespace quintic
