#include "quintic/cohomology.hpp"

#include "quintic/error.hpp"

namespace quintic {

namespace {

void require_injective(const GradedMorphism& phi, const char* op) {
  if (!phi.is_square() || !is_injective(phi)) throw DomainError(std::string(op) + " needs an injective morphism");
}

// Offsets of each summand's block inside H^0 of a twist sum twisted by m.
std::vector<std::size_t> offsets(const TwistSum& t, int m) {
  std::vector<std::size_t> off{0};
  for (int a : t.twists()) off.push_back(off.back() + monomial_count(a + m));
  return off;
}

// Serre-dual presentation: transpose with source -b and target -a.
GradedMorphism serre_transpose(const GradedMorphism& phi) {
  std::vector<int> source, target;
  for (int b : phi.target().twists()) source.push_back(-b);
  for (int a : phi.source().twists()) target.push_back(-a);
  FormGrid t(phi.cols(), std::vector<Form>(phi.rows()));
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) t[j][i] = phi.at(i, j);
  return GradedMorphism::arrange(phi.field(), source, target, t);
}

std::size_t h0_omega_unchecked(const GradedMorphism& phi, int j) {
  const Field f = phi.field();
  const Matrix s0 = section_matrix(phi, j);
  const Matrix s1 = section_matrix(phi, j + 1);
  const std::size_t n0 = s0.rows();
  // Complement of im S0 spanned by standard vectors: pivots of [S0 | I] inside I.
  Matrix aug(f, n0, s0.cols() + n0);
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t c = 0; c < s0.cols(); ++c) aug.at(r, c) = s0.at(r, c);
    aug.at(r, s0.cols() + r) = Scalar::one(f);
  }
  std::vector<std::size_t> complement;
  for (std::size_t p : rref(aug).pivots)
    if (p >= s0.cols()) complement.push_back(p - s0.cols());
  if (complement.empty()) return 0;

  // Functionals vanishing on im S1 identify H^0(F(j+1)) with their span's dual.
  const std::vector<Vector> q1 = kernel_basis(s1.transpose());
  const auto off0 = offsets(phi.target(), j);
  const auto off1 = offsets(phi.target(), j + 1);
  Matrix m(f, q1.size(), complement.size() * 3);
  std::size_t col = 0;
  for (std::size_t idx : complement) {
    std::size_t summand = 0;
    while (off0[summand + 1] <= idx) ++summand;
    const int d = phi.target()[summand] + j;
    Exponent e = monomials(d)[idx - off0[summand]];
    for (int v = 0; v < 3; ++v, ++col) {
      Exponent shifted = e;
      ++shifted[v];
      const std::size_t target_idx = off1[summand] + monomial_index(shifted);
      for (std::size_t r = 0; r < q1.size(); ++r) m.at(r, col) = q1[r][target_idx];
    }
  }
  return 3 * complement.size() - rank(m);
}

}  // namespace

std::string CohomologySignature::to_string() const {
  return "(" + std::to_string(h0_minus1) + "," + std::to_string(h1) + "," + std::to_string(h0_omega) + ")";
}

Matrix section_matrix(const GradedMorphism& phi, int m) {
  const auto row_off = offsets(phi.target(), m);
  const auto col_off = offsets(phi.source(), m);
  Matrix s(phi.field(), row_off.back(), col_off.back());
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    const auto& src = monomials(phi.source()[j] + m);
    for (std::size_t i = 0; i < phi.rows(); ++i) {
      const Form& e = phi.at(i, j);
      if (e.is_zero() || phi.target()[i] + m < 0) continue;
      for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [ex, coef] : e.terms()) {
          const Exponent prod{ex[0] + src[c][0], ex[1] + src[c][1], ex[2] + src[c][2]};
          s.at(row_off[i] + monomial_index(prod), col_off[j] + c) += coef;
        }
    }
  }
  return s;
}

std::size_t h0_twist(const GradedMorphism& phi, int m) {
  require_injective(phi, "h0_twist");
  const std::size_t b = phi.target().h0(m);
  const std::size_t a = phi.source().h0(m);
  if (a > b) throw DomainError("h0_twist: negative section count");
  return b - a;
}

std::size_t h1_twist(const GradedMorphism& phi, int m) {
  require_injective(phi, "h1_twist");
  const Matrix s = section_matrix(serre_transpose(phi), -3 - m);
  const std::size_t r = rank(s);
  if (s.cols() != r)
    throw DomainError("h1_twist: H^2(A(" + std::to_string(m) + ")) -> H^2(B(" + std::to_string(m) +
                      ")) is not surjective");
  return s.rows() - r;
}

std::size_t h0_omega_twisted(const GradedMorphism& phi, int j) {
  require_injective(phi, "h0_omega");
  return h0_omega_unchecked(phi, j);
}

std::size_t h0_omega(const GradedMorphism& phi) { return h0_omega_twisted(phi, 0); }

long h1_omega(const GradedMorphism& phi) {
  const long chi = hilbert(phi).chi;
  return long(h0_omega(phi)) - (2 * chi - 5);
}

CohomologySignature signature(const GradedMorphism& phi) {
  require_injective(phi, "signature");
  const HilbertData h = hilbert(phi);
  CohomologySignature sig;
  sig.h0_minus1 = phi.target().h0(-1) - phi.source().h0(-1);
  sig.h1 = h1_twist(phi, 0);
  sig.h0_omega = h0_omega_unchecked(phi, 0);
  const long h0 = long(phi.target().h0(0)) - long(phi.source().h0(0));
  const long h1m = long(h1_twist(phi, -1));
  if (long(sig.h0_minus1) - h1m != h.chi - h.r || h0 - long(sig.h1) != h.chi)
    throw DomainError("signature: Euler relations fail for " + sig.to_string());
  return sig;
}

}  // namespace quintic
