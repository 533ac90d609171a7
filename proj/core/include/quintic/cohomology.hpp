#pragma once

#include <cstddef>
#include <string>

#include "quintic/graded.hpp"
#include "quintic/matrix.hpp"

namespace quintic {

/// (h0(F(-1)), h1(F), h0(F x Omega^1(1))) for F = coker(phi).
struct CohomologySignature {
  std::size_t h0_minus1 = 0;
  std::size_t h1 = 0;
  std::size_t h0_omega = 0;

  std::string to_string() const;
  friend bool operator==(const CohomologySignature&, const CohomologySignature&) = default;
};

/// Matrix of H^0(phi(m)) in graded-lex monomial bases, summands in stored order.
Matrix section_matrix(const GradedMorphism& phi, int m);
/// h0(F(m)) = h0(B(m)) - h0(A(m)).
std::size_t h0_twist(const GradedMorphism& phi, int m);
/// h1(F(m)) from the Serre-dual section matrix; throws DomainError if h2(F(m)) != 0.
std::size_t h1_twist(const GradedMorphism& phi, int m);
/// h0(F x Omega^1(1 + j)): kernel of V x H^0(F(j)) -> H^0(F(j+1)).
std::size_t h0_omega_twisted(const GradedMorphism& phi, int j);
std::size_t h0_omega(const GradedMorphism& phi);
/// h0_omega - (2 chi - 5).
long h1_omega(const GradedMorphism& phi);
/// Checks both Euler relations before returning.
CohomologySignature signature(const GradedMorphism& phi);

}  // namespace quintic
