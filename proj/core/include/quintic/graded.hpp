#pragma once

#include <string>
#include <vector>

#include "quintic/form.hpp"

namespace quintic {

/// Direct sum of line bundles O(a_1) + ... + O(a_n), kept in descending order.
class TwistSum {
 public:
  TwistSum() = default;
  explicit TwistSum(std::vector<int> twists);

  std::size_t size() const { return twists_.size(); }
  int operator[](std::size_t i) const { return twists_[i]; }
  const std::vector<int>& twists() const { return twists_; }
  int sum() const;
  /// Number of summands equal to O(t).
  std::size_t multiplicity(int t) const;
  /// Positions holding O(t), in stored order.
  std::vector<std::size_t> indices(int t) const;
  /// Total dimension of H^0 of the sum twisted by m.
  std::size_t h0(int m) const;
  /// e.g. "O(-2)^2 O(-1)".
  std::string to_string() const;

  friend bool operator==(const TwistSum&, const TwistSum&) = default;

 private:
  std::vector<int> twists_;
};

using FormGrid = std::vector<std::vector<Form>>;

/// Matrix of forms from `source` to `target`; entry (i,j) maps O(source[j]) to O(target[i]).
class GradedMorphism {
 public:
  GradedMorphism() = default;
  /// Entries in the canonical order of the twist sums. Zero entries are
  /// re-stamped with their expected degree.
  GradedMorphism(Field f, TwistSum source, TwistSum target, FormGrid entries);

  /// Twists in any order; rows and columns are stably sorted into canonical order.
  static GradedMorphism arrange(Field f, const std::vector<int>& source, const std::vector<int>& target,
                                const FormGrid& entries);
  static GradedMorphism identity(Field f, const TwistSum& t);

  Field field() const { return field_; }
  const TwistSum& source() const { return source_; }
  const TwistSum& target() const { return target_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }
  const Form& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const FormGrid& entries() const { return entries_; }
  /// Expected degree of entry (i,j).
  int entry_degree(std::size_t i, std::size_t j) const { return target_[i] - source_[j]; }

  /// Sub-grid of rows with target twist `t` and columns with source twist `s`.
  FormGrid block(int t, int s) const;
  bool is_square() const { return rows() == cols(); }

  GradedMorphism reduce(Field target) const;
  std::string to_string() const;

  friend bool operator==(const GradedMorphism&, const GradedMorphism&) = default;

 private:
  Field field_;
  TwistSum source_;
  TwistSum target_;
  FormGrid entries_;
};

/// Polynomial P(t) = r t + chi.
struct HilbertData {
  int r = 0;
  int chi = 0;
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Every entry is zero or of degree target - source, and zero where that is negative.
bool validate(const GradedMorphism& phi);
/// psi * phi; requires phi.target == psi.source.
GradedMorphism compose(const GradedMorphism& psi, const GradedMorphism& phi);
/// Determinant of a form matrix by cofactor expansion; `degree` stamps a zero result.
Form determinant(const FormGrid& m, Field f, int degree = 0);
Form determinant(const GradedMorphism& phi);
bool is_injective(const GradedMorphism& phi);
/// Transpose presenting F^D(k): twists become -3+k-b and -3+k-a.
GradedMorphism dual_resolution(const GradedMorphism& phi, int k);
/// Cancels invertible constant entries until none remain.
GradedMorphism minimize(const GradedMorphism& phi);
HilbertData hilbert(const GradedMorphism& phi);
/// Signed maximal minors (-1)^i M_i of a k x (k+1) or (k+1) x k grid, M_i deleting
/// index i (from 0). A 1 x n or n x 1 vector with n != 2 gives its entries.
/// Throws DomainError for other shapes.
std::vector<Form> maximal_minors(const FormGrid& block, Field f);
/// Maximal minors of the rows of phi listed in `rows`.
std::vector<Form> maximal_minors(const GradedMorphism& phi, const std::vector<std::size_t>& rows);
/// Equal up to a permutation of rows and columns compatible with the twists.
bool equivalent_up_to_permutation(const GradedMorphism& a, const GradedMorphism& b);

}  // namespace quintic
