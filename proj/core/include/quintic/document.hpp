#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quintic/graded.hpp"
#include "quintic/strata.hpp"

namespace quintic {

/// Contents of a matrix file.
struct MatrixDocument {
  std::optional<ModuliSpaceId> space;
  GradedMorphism morphism;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// Parses the matrix file grammar. Errors are ParseError with line and column.
MatrixDocument parse_document(std::string_view text, Field f = Field::rationals());
/// Canonical text: twists ascending, runs written as O(a)^n, O(0) as O, one row per line.
std::string print_document(const MatrixDocument& doc);
/// "O(-2)^2 O(-1)" style list of the given twists in ascending order.
std::string format_twists(const TwistSum& t);

}  // namespace quintic
