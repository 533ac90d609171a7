#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "quintic/graded.hpp"
#include "quintic/strata.hpp"

namespace quintic {

using Rng = std::mt19937_64;

/// Uniform in [-bound, bound] over Q, uniform residue over F_p.
Scalar random_scalar(Field f, Rng& rng, int bound);
Form random_form(Field f, int degree, Rng& rng, int bound);
/// Random invertible constant matrix.
Matrix random_invertible(Field f, std::size_t n, Rng& rng, int bound);
/// Constant matrix times a grid of forms, and a grid times a constant matrix.
FormGrid left_multiply(const Matrix& g, const FormGrid& m, Field f);
FormGrid right_multiply(const FormGrid& m, const Matrix& g, Field f);
/// b phi a for random graded automorphisms: invertible constant blocks on equal
/// twists, random forms where the twist increases, zero elsewhere.
GradedMorphism random_recombination(const GradedMorphism& phi, Rng& rng, int bound);
/// Same, but with constant entries only (block diagonal).
GradedMorphism random_constant_recombination(const GradedMorphism& phi, Rng& rng, int bound);

/// [[l1, l2], [f1, f2]] : 2O(-3) -> O(-2) + O(1).
GradedMorphism quintic_with_point(const Form& l1, const Form& l2, const Form& f1, const Form& f2);
/// [f] : O(-4) -> O(1).
GradedMorphism twisted_structure_sheaf(const Form& f);
/// [[h1/g, X], [-h2, g]] : O(-3) + O(-1) -> O + O(1) with h = h1(Y,Z) + X h2.
/// With `line`, X is replaced by that linear form through a change of coordinates.
GradedMorphism flag_section(const Form& g, const Form& h, const std::optional<Form>& line = std::nullopt);
/// [[quot, 0], [delta, sub]] followed by minimize; delta maps source(quot) to target(sub).
GradedMorphism extension_block(const GradedMorphism& sub, const GradedMorphism& quot, const GradedMorphism& delta);

struct SampleRequest {
  ModuliSpaceId space{5, 3};
  Label label = Label::X0;
  std::optional<std::string> sublabel;
  std::uint64_t seed = 1;
  Field field = Field::rationals();
  int coefficient_bound = 10;
  int retry_cap = 50;
};

/// Random member of the requested stratum; deterministic in the seed. Throws
/// DomainError once retry_cap attempts fail to classify as requested.
GradedMorphism sample_stratum(const SampleRequest& req);
/// Uniformly random matrix of the catalogue shape (no conditions imposed).
GradedMorphism random_shape(ModuliSpaceId space, Label label, Field f, Rng& rng, int bound);

}  // namespace quintic

namespace quintic {

/// 3 x 4 matrix of linear forms psi0(y, z) + x C with psi0 of rank at most 2, mixed by random
/// invertible constants: every maximal minor is divisible by the returned linear form.
/// Some maximal minor is nonzero.
std::pair<FormGrid, Form> common_factor_kronecker(Field f, Rng& rng, int bound);

}  // namespace quintic
