#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/cohomology.hpp"
#include "quintic/graded.hpp"

namespace quintic {

/// M(5, chi). Supported: chi in 0..5.
struct ModuliSpaceId {
  int r = 5;
  int chi = 0;

  /// "M(5,3)".
  std::string to_string() const;
  /// Slope chi/r in lowest terms, e.g. "3/5" or "0".
  std::string slope() const;
  /// Parses "M(5,<int>)"; throws DomainError on anything else.
  static ModuliSpaceId parse(const std::string& text);
  friend bool operator==(const ModuliSpaceId&, const ModuliSpaceId&) = default;
};

enum class Label { X0, X1, X2, X3, NotInjective, WrongShape, ConditionsFailed };

std::string label_name(Label l);
/// Accepts "X0".."X3"; throws DomainError otherwise.
Label parse_stratum(const std::string& text);
bool is_stratum(Label l);

struct Condition {
  std::string name;
  bool value = false;
};

struct StratumReport {
  ModuliSpaceId space;
  Label label = Label::WrongShape;
  std::optional<std::string> sublabel;
  std::vector<Condition> conditions;
  /// Present when the minimized morphism is square and injective.
  std::optional<CohomologySignature> signature;
  /// For the dual spaces M(5,2), M(5,4), M(5,5): (h0(G(-1)), h1(G), h1(G x Omega^1(1))).
  std::optional<std::array<long, 3>> serre_signature;
  std::optional<HilbertData> hilbert;
  Form determinant;
  std::vector<std::string> warnings;
};

/// One catalogue row. Twists are listed in the conventional order of the row.
struct CatalogueEntry {
  ModuliSpaceId space;
  Label label;
  std::vector<int> source;
  std::vector<int> target;
  int codim = 0;
  CohomologySignature signature;
  /// (target twist, source twist) blocks that vanish identically.
  std::vector<std::pair<int, int>> zero_blocks;
};

/// The twelve rows for M(5,3), M(5,1), M(5,0).
const std::vector<CatalogueEntry>& catalogue();
/// Row for a primal space; nullptr when absent.
const CatalogueEntry* find_entry(ModuliSpaceId space, Label label);

/// The primal space a dual space is obtained from, with the twist k used.
struct DualLink {
  ModuliSpaceId primal;
  ModuliSpaceId dual;
  int k = 1;
};
/// Link for any supported space (primal or dual side).
DualLink dual_link(ModuliSpaceId space);
bool is_primal(ModuliSpaceId space);
/// Source and target twists of (space, label), including dual spaces.
std::pair<std::vector<int>, std::vector<int>> shape_of(ModuliSpaceId space, Label label);

StratumReport classify(ModuliSpaceId space, const GradedMorphism& phi);
/// Dualizes with the canonical twist and classifies in the dual space.
std::pair<ModuliSpaceId, StratumReport> dual_classify(ModuliSpaceId space, const GradedMorphism& phi);
/// The canonical dual presentation used by dual_classify.
GradedMorphism canonical_dual(ModuliSpaceId space, const GradedMorphism& phi);

/// Solutions (a, b) of b phi = phi a in graded endomorphisms, minus the homotheties.
std::size_t stabilizer_dimension(const GradedMorphism& phi);

struct DimensionAudit {
  ModuliSpaceId space;
  Label label = Label::X0;
  std::size_t dim_W = 0;
  std::size_t dim_G = 0;
  std::size_t stab_dim = 0;
  long stratum_dim = 0;
  int expected_codim = 0;
  bool ok = false;
};

/// Free coefficients of the shape after imposing its zero blocks.
std::size_t shape_dimension(const CatalogueEntry& e);
/// dim End(A) + dim End(B) - 1.
std::size_t group_dimension(const CatalogueEntry& e);
/// stab_dim is the minimum over `samples` seeded samples.
DimensionAudit dimension_audit(ModuliSpaceId space, Label label, int samples = 20, std::uint64_t seed = 1);
/// dim N(n, a, b) = n a b - a^2 - b^2 + 1.
long kronecker_moduli_dimension(long n, long a, long b);

}  // namespace quintic
