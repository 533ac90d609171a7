#include "quintic/strata.hpp"

#include <numeric>
#include <regex>

#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/kronecker.hpp"

namespace quintic {

namespace {

const char* const kGenericX0 = "X0∖X01";

struct Battery {
  std::vector<Condition> conditions;
  std::optional<std::string> sublabel;
  bool pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.value; });
  }
};

std::vector<Form> column(const FormGrid& block, std::size_t j) {
  std::vector<Form> out;
  for (const auto& row : block) out.push_back(row.at(j));
  return out;
}

std::vector<Form> flatten(const FormGrid& block) {
  std::vector<Form> out;
  for (const auto& row : block)
    for (const auto& x : row) out.push_back(x);
  return out;
}

bool all_zero(const FormGrid& block) {
  for (const auto& row : block)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

// Condition battery of a primal row, run on a morphism of that row's shape.
Battery run_battery(int chi, Label label, const GradedMorphism& phi) {
  const Field f = phi.field();
  Battery b;
  b.conditions.push_back({"injective", true});
  auto add = [&](std::string name, bool v) { b.conditions.push_back({std::move(name), v}); };

  if (chi == 3 && label == Label::X0) {
    const FormGrid q = phi.block(0, -2);
    const FormGrid l = phi.block(0, -1);
    const auto result = m53_x0_battery(column(q, 0), column(q, 1), column(l, 0));
    add("phi12_span_at_least_2", result.span_ok);
    add("kernel_row_keeps_quadrics_independent", result.quadrics_ok);
    if (result.passes()) b.sublabel = linear_span_dim(column(l, 0)) == 3 ? kGenericX0 : "X01";
  } else if (chi == 3 && label == Label::X1) {
    add("phi12_zero", all_zero(phi.block(-1, -1)));
    add("phi11_span_2", linear_span_dim(flatten(phi.block(-1, -2))) == 2);
    add("phi22_minors_span_3", minors_profile(phi.block(0, -1), f).span_dim == 3);
  } else if (chi == 3 && label == Label::X2) {
    const auto profile = minors_profile(phi.block(-1, -2), f);
    add("phi11_minors_span_3", profile.span_dim == 3);
    if (profile.span_dim == 3) b.sublabel = profile.gcd && profile.gcd->degree() >= 1 ? "X21" : "X20";
  } else if (chi == 3 && label == Label::X3) {
    const Form l = phi.block(0, -1)[0][0];
    const Form q = phi.block(1, -1)[0][0];
    add("phi12_nonzero", !l.is_zero());
    add("phi12_not_dividing_phi22", !l.is_zero() && !divides(l, q));
  } else if (chi == 1 && label == Label::X0) {
    const KroneckerModule psi(f, phi.block(-1, -2));
    const auto pat = forbidden_patterns_3x4(psi);
    add("phi11_no_zero_column", !pat[0]);
    add("phi11_no_2x2_zero_block", !pat[1]);
    add("phi11_no_1x3_zero_block", !pat[2]);
    if (!pat[0] && !pat[1] && !pat[2]) {
      const int d = kernel_twist(psi).d;
      if (d == 4) b.sublabel = "X01";
      if (d == 3) b.sublabel = "X02";
    }
  } else if (chi == 1 && label == Label::X1) {
    const auto qs = column(phi.block(0, -2), 0);
    const bool independent = linear_span_dim(qs) == 2;
    add("phi12_phi22_span_2", independent);
    if (independent) b.sublabel = gcd(qs).degree() >= 1 ? "X11" : "X10";
  } else if (chi == 1 && label == Label::X2) {
    const Form q = phi.block(-1, -3)[0][0];
    const Form l = phi.block(-1, -2)[0][0];
    add("phi13_zero", all_zero(phi.block(-1, -1)));
    add("phi12_nonzero", !l.is_zero());
    add("phi12_not_dividing_phi11", !l.is_zero() && !divides(l, q));
    add("phi23_span_2", linear_span_dim(flatten(phi.block(0, -1))) == 2);
  } else if (chi == 1 && label == Label::X3) {
    add("phi11_span_2", linear_span_dim(flatten(phi.block(-2, -3))) == 2);
  } else if (chi == 0 && label == Label::X0) {
    b.sublabel = stable_5x5(KroneckerModule(f, phi.entries())) ? "stable" : "strictly-semistable";
  } else if (chi == 0 && label == Label::X1) {
    add("phi12_injective", !determinant(phi.block(-1, -2), f, 2).is_zero());
  } else if (chi == 0 && label == Label::X2) {
    add("phi11_span_2", linear_span_dim(flatten(phi.block(-2, -3))) == 2);
    add("phi22_span_2", linear_span_dim(flatten(phi.block(0, -1))) == 2);
  } else if (chi == 0 && label == Label::X3) {
    add("phi_nonzero", !phi.at(0, 0).is_zero());
  }
  if (!b.pass()) b.sublabel.reset();
  return b;
}

std::vector<int> dualize_twists(const std::vector<int>& t, int k) {
  std::vector<int> out;
  for (int x : t) out.push_back(-3 + k - x);
  return out;
}

}  // namespace

std::string ModuliSpaceId::to_string() const { return "M(" + std::to_string(r) + "," + std::to_string(chi) + ")"; }

std::string ModuliSpaceId::slope() const {
  const int g = std::gcd(r, chi);
  if (chi == 0) return "0";
  const int num = chi / g, den = r / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ModuliSpaceId ModuliSpaceId::parse(const std::string& text) {
  static const std::regex re(R"(\s*M\(\s*5\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw DomainError("unrecognized moduli space '" + text + "'");
  ModuliSpaceId id;
  id.chi = std::stoi(m[1].str());
  if (id.chi < 0 || id.chi > 5) throw DomainError("unsupported moduli space " + id.to_string());
  return id;
}

std::string label_name(Label l) {
  switch (l) {
    case Label::X0: return "X0";
    case Label::X1: return "X1";
    case Label::X2: return "X2";
    case Label::X3: return "X3";
    case Label::NotInjective: return "NotInjective";
    case Label::WrongShape: return "WrongShape";
    case Label::ConditionsFailed: return "ConditionsFailed";
  }
  return "?";
}

Label parse_stratum(const std::string& text) {
  for (Label l : {Label::X0, Label::X1, Label::X2, Label::X3})
    if (text == label_name(l)) return l;
  throw DomainError("unknown stratum '" + text + "'");
}

bool is_stratum(Label l) { return l == Label::X0 || l == Label::X1 || l == Label::X2 || l == Label::X3; }

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> rows = {
      {{5, 3}, Label::X0, {-2, -2, -1}, {0, 0, 0}, 0, {0, 0, 1}, {}},
      {{5, 3}, Label::X1, {-2, -2, -1, -1}, {-1, 0, 0, 0}, 2, {0, 0, 2}, {{-1, -1}}},
      {{5, 3}, Label::X2, {-2, -2, -2}, {-1, -1, 1}, 3, {1, 0, 3}, {}},
      {{5, 3}, Label::X3, {-3, -1}, {0, 1}, 4, {1, 1, 4}, {}},
      {{5, 1}, Label::X0, {-2, -2, -2, -2}, {-1, -1, -1, 0}, 0, {0, 0, 0}, {}},
      {{5, 1}, Label::X1, {-3, -2}, {0, 0}, 2, {0, 1, 0}, {}},
      {{5, 1}, Label::X2, {-3, -2, -1}, {-1, 0, 0}, 3, {0, 1, 1}, {{-1, -1}}},
      {{5, 1}, Label::X3, {-3, -3}, {-2, 1}, 5, {1, 2, 3}, {}},
      {{5, 0}, Label::X0, {-2, -2, -2, -2, -2}, {-1, -1, -1, -1, -1}, 0, {0, 0, 0}, {}},
      {{5, 0}, Label::X1, {-3, -2, -2}, {-1, -1, 0}, 1, {0, 1, 0}, {}},
      {{5, 0}, Label::X2, {-3, -3, -1}, {-2, 0, 0}, 4, {0, 2, 1}, {}},
      {{5, 0}, Label::X3, {-4}, {1}, 6, {1, 3, 3}, {}},
  };
  return rows;
}

const CatalogueEntry* find_entry(ModuliSpaceId space, Label label) {
  for (const auto& e : catalogue())
    if (e.space == space && e.label == label) return &e;
  return nullptr;
}

DualLink dual_link(ModuliSpaceId space) {
  if (space.r != 5) throw DomainError("only multiplicity 5 is supported");
  switch (space.chi) {
    case 3: return {{5, 3}, {5, 2}, 1};
    case 2: return {{5, 3}, {5, 2}, 1};
    case 1: return {{5, 1}, {5, 4}, 1};
    case 4: return {{5, 1}, {5, 4}, 1};
    case 0: return {{5, 0}, {5, 0}, 0};
    case 5: return {{5, 0}, {5, 5}, 1};
    default: throw DomainError("unsupported moduli space " + space.to_string());
  }
}

bool is_primal(ModuliSpaceId space) { return space.chi == 0 || space.chi == 1 || space.chi == 3; }

std::pair<std::vector<int>, std::vector<int>> shape_of(ModuliSpaceId space, Label label) {
  const DualLink link = dual_link(space);
  const CatalogueEntry* e = find_entry(link.primal, label);
  if (!e) throw DomainError(label_name(label) + " is not a stratum of " + space.to_string());
  if (is_primal(space)) return {e->source, e->target};
  return {dualize_twists(e->target, link.k), dualize_twists(e->source, link.k)};
}

StratumReport classify(ModuliSpaceId space, const GradedMorphism& phi) {
  if (!validate(phi)) throw DegreeError("classify: entries do not match the twists");
  const DualLink link = dual_link(space);
  const bool primal = is_primal(space);
  StratumReport report;
  report.space = space;
  const GradedMorphism m = minimize(phi);
  const Field f = m.field();
  report.determinant = Form(f, m.target().sum() - m.source().sum());
  const bool square = m.is_square();
  if (square) report.determinant = determinant(m);
  const bool injective = square && !report.determinant.is_zero();
  if (injective) {
    try {
      report.hilbert = hilbert(m);
    } catch (const DomainError& e) {
      report.warnings.push_back(e.what());
    }
  }

  std::optional<Label> matched;
  for (Label l : {Label::X0, Label::X1, Label::X2, Label::X3}) {
    const auto [src, tgt] = shape_of(space, l);
    if (TwistSum(src) == m.source() && TwistSum(tgt) == m.target()) matched = l;
  }
  if (!matched) {
    report.label = Label::WrongShape;
    if (injective && report.hilbert) report.signature = signature(m);
    return report;
  }
  if (!injective) {
    report.label = Label::NotInjective;
    report.conditions.push_back({"injective", false});
    return report;
  }

  const CatalogueEntry& row = *find_entry(link.primal, *matched);
  const GradedMorphism primal_phi = primal ? m : dual_resolution(m, link.k);
  Battery battery = run_battery(link.primal.chi, *matched, primal_phi);
  report.conditions = battery.conditions;
  report.signature = signature(m);
  if (!battery.pass()) {
    report.label = Label::ConditionsFailed;
    return report;
  }
  report.label = *matched;
  report.sublabel = battery.sublabel;

  bool consistent = true;
  if (primal) {
    consistent = *report.signature == row.signature;
  } else {
    const std::array<long, 3> serre{long(report.signature->h0_minus1), long(report.signature->h1), h1_omega(m)};
    report.serre_signature = serre;
    const std::array<long, 3> expected{long(row.signature.h1), long(row.signature.h0_minus1),
                                       long(row.signature.h0_omega)};
    consistent = serre == expected;
  }
  if (!consistent) {
    report.warnings.push_back("signature " + report.signature->to_string() + " disagrees with the table row for " +
                              label_name(*matched));
    report.label = Label::ConditionsFailed;
    report.sublabel.reset();
  }
  return report;
}

GradedMorphism canonical_dual(ModuliSpaceId space, const GradedMorphism& phi) {
  return dual_resolution(minimize(phi), dual_link(space).k);
}

std::pair<ModuliSpaceId, StratumReport> dual_classify(ModuliSpaceId space, const GradedMorphism& phi) {
  const DualLink link = dual_link(space);
  const ModuliSpaceId target = space == link.primal ? link.dual : link.primal;
  return {target, classify(target, canonical_dual(space, phi))};
}

std::size_t stabilizer_dimension(const GradedMorphism& phi) {
  if (!validate(phi)) throw DegreeError("stabilizer_dimension: entries do not match the twists");
  const Field f = phi.field();
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  // Equation rows: coefficients of (b phi - phi a)_{ij} in degree tgt[i] - src[j].
  std::vector<std::size_t> row_off{0};
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) row_off.push_back(row_off.back() + monomial_count(tgt[i] - src[j]));
  auto eq_index = [&](std::size_t i, std::size_t j, const Exponent& e) {
    return row_off[i * phi.cols() + j] + monomial_index(e);
  };
  std::vector<Vector> columns;
  const std::size_t n_eq = row_off.back();
  // b: entry (k,l) maps O(tgt[l]) to O(tgt[k]); contributes mu * phi_{l j} to row k.
  for (std::size_t k = 0; k < phi.rows(); ++k)
    for (std::size_t l = 0; l < phi.rows(); ++l)
      for (const auto& mu : monomials(tgt[k] - tgt[l])) {
        Vector col(n_eq, Scalar::zero(f));
        for (std::size_t j = 0; j < phi.cols(); ++j)
          for (const auto& [e, c] : phi.at(l, j).terms())
            col[eq_index(k, j, {e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]})] += c;
        columns.push_back(std::move(col));
      }
  // a: entry (k,l) maps O(src[l]) to O(src[k]); contributes -phi_{i k} mu to column l.
  for (std::size_t k = 0; k < phi.cols(); ++k)
    for (std::size_t l = 0; l < phi.cols(); ++l)
      for (const auto& mu : monomials(src[k] - src[l])) {
        Vector col(n_eq, Scalar::zero(f));
        for (std::size_t i = 0; i < phi.rows(); ++i)
          for (const auto& [e, c] : phi.at(i, k).terms())
            col[eq_index(i, l, {e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]})] -= c;
        columns.push_back(std::move(col));
      }
  Matrix m(f, n_eq, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n_eq; ++r) m.at(r, c) = columns[c][r];
  const std::size_t nullity = columns.size() - rank(m);
  return nullity - 1;
}

std::size_t shape_dimension(const CatalogueEntry& e) {
  std::size_t total = 0;
  for (int t : e.target)
    for (int s : e.source) {
      if (std::find(e.zero_blocks.begin(), e.zero_blocks.end(), std::pair{t, s}) != e.zero_blocks.end()) continue;
      total += monomial_count(t - s);
    }
  return total;
}

std::size_t group_dimension(const CatalogueEntry& e) {
  std::size_t total = 0;
  for (const auto* side : {&e.source, &e.target})
    for (int x : *side)
      for (int y : *side) total += monomial_count(x - y);
  return total - 1;
}

DimensionAudit dimension_audit(ModuliSpaceId space, Label label, int samples, std::uint64_t seed) {
  const CatalogueEntry* e = find_entry(space, label);
  if (!e) throw DomainError(label_name(label) + " of " + space.to_string() + " is not in the catalogue");
  DimensionAudit a;
  a.space = space;
  a.label = label;
  a.dim_W = shape_dimension(*e);
  a.dim_G = group_dimension(*e);
  a.expected_codim = e->codim;
  std::optional<std::size_t> best;
  for (int i = 0; i < samples; ++i) {
    SampleRequest req;
    req.space = space;
    req.label = label;
    req.seed = seed + std::uint64_t(i);
    const std::size_t s = stabilizer_dimension(sample_stratum(req));
    best = best ? std::min(*best, s) : s;
  }
  if (!best) throw DomainError("dimension_audit: no samples");
  a.stab_dim = *best;
  a.stratum_dim = long(a.dim_W) - long(a.dim_G) + long(a.stab_dim);
  a.ok = a.stratum_dim == 26 - a.expected_codim;
  return a;
}

long kronecker_moduli_dimension(long n, long a, long b) { return n * a * b - a * a - b * b + 1; }

}  // namespace quintic
