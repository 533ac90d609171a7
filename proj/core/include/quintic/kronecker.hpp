#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quintic/graded.hpp"
#include "quintic/matrix.hpp"

namespace quintic {

/// b x a matrix of linear forms.
class KroneckerModule {
 public:
  KroneckerModule() = default;
  /// Throws DegreeError unless every entry is zero or linear.
  KroneckerModule(Field f, FormGrid entries);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FormGrid& entries() const { return entries_; }
  /// Coefficient matrix of variable c (0 = x, 1 = y, 2 = z).
  const Matrix& slice(int c) const { return slices_[c]; }
  KroneckerModule reduce(Field target) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FormGrid entries_;
  std::array<Matrix, 3> slices_;
};

/// Column subspace S (a basis) whose row support violates King's inequality.
struct DestabilizingWitness {
  std::vector<Vector> column_subspace;
  std::size_t row_support_dim = 0;
};

struct KingVerdict {
  bool semistable = false;
  bool stable = false;
  /// Violates the weak inequality when not semistable, else the strict one when not stable.
  std::optional<DestabilizingWitness> witness;
  /// Over Q the verdict comes from reductions modulo `primes`; "unstable" is then probabilistic.
  bool probabilistic = false;
  std::vector<std::uint32_t> primes;
};

struct KingOptions {
  /// Cap on the number of column subspaces examined.
  std::uint64_t budget = 2'000'000;
  /// Number of primes tried over Q.
  int prime_count = 3;
};

/// Span dimension in field^b of the coefficient vectors of psi * S.
std::size_t row_support_dim(const KroneckerModule& psi, const std::vector<Vector>& subspace);
/// Number of points of Gr(q, F_p^n).
std::uint64_t grassmannian_size(std::uint32_t p, int n, int q);
/// King's criterion by enumerating every nonzero column subspace over F_p; over Q
/// via reductions modulo small primes. Throws DomainError past the budget.
KingVerdict king_semistable(const KroneckerModule& psi, const KingOptions& opts = {});
bool king_stable(const KroneckerModule& psi, const KingOptions& opts = {});

struct KernelTwist {
  int d = 0;
  Form g;
  std::vector<Form> eta;
};
/// For a 3 x 4 module in degrees (-2,-1): eta_i = (-1)^i M_i / g, kernel O(-d).
KernelTwist kernel_twist(const KroneckerModule& psi);

struct MinorsProfile {
  std::size_t span_dim = 0;
  /// gcd of the maximal minors; empty when they all vanish.
  std::optional<Form> gcd;
  /// The gcd when it is linear.
  std::optional<Form> common_linear_factor;
};
MinorsProfile minors_profile(const FormGrid& block, Field f);
inline MinorsProfile minors_profile(const KroneckerModule& psi) { return minors_profile(psi.entries(), psi.field()); }

// Closed-form decisions, exact over Q and F_p.

/// 3 x 4 block: semistable iff none of the three forbidden zero patterns occurs
/// (zero column, 2 x 2 zero block, 1 x 3 zero block) after constant row/column operations.
bool semistable_3x4(const KroneckerModule& psi);
/// Which of the three patterns occur: {zero column, 2x2 block, 1x3 block}.
std::array<bool, 3> forbidden_patterns_3x4(const KroneckerModule& psi);
/// 5 x 5 block with nonzero determinant: stable over the base field (over Q, geometric stability).
bool stable_5x5(const KroneckerModule& psi);

/// M(5,3) X0 shape 2O(-2)+O(-1) -> 3O given by its quadric columns q1, q2 and linear column l.
struct M53X0Battery {
  bool span_ok = false;       // linear entries span at least 2
  bool quadrics_ok = false;   // no v with v.l = 0 and v.q1, v.q2 dependent
  bool passes() const { return span_ok && quadrics_ok; }
};
M53X0Battery m53_x0_battery(const std::vector<Form>& q1, const std::vector<Form>& q2, const std::vector<Form>& l);
/// Exhaustive F_p search for the two forbidden forms of the same shape.
bool m53_x0_forbidden_by_enumeration(const std::vector<Form>& q1, const std::vector<Form>& q2,
                                     const std::vector<Form>& l);

/// Points of P^{n-1}(F_p) as normalized vectors (first nonzero coordinate 1).
std::vector<Vector> projective_points(Field f, int n);

}  // namespace quintic
