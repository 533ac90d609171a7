#include "quintic/oracle.hpp"

#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/kronecker.hpp"
#include "quintic/parallel.hpp"

namespace quintic {

namespace {

const Field kQ = Field::rationals();
// Integral coefficients in [-2, 2]: every residue class mod 5 has a representative.
constexpr int kBound = 2;

FormGrid random_grid(std::size_t rows, std::size_t cols, int degree, Rng& rng) {
  FormGrid g(rows, std::vector<Form>(cols));
  for (auto& row : g)
    for (auto& e : row) e = random_form(kQ, degree, rng, kBound);
  return g;
}

// Integral matrix that stays invertible modulo p.
Matrix unimodular_mod(std::size_t n, Field fp, Rng& rng) {
  for (;;) {
    Matrix m = random_invertible(kQ, n, rng, kBound);
    if (!determinant(m.reduce(fp)).is_zero()) return m;
  }
}

FormGrid recombine(const FormGrid& g, Field fp, Rng& rng) {
  const FormGrid left = left_multiply(unimodular_mod(g.size(), fp, rng), g, kQ);
  return right_multiply(left, unimodular_mod(g[0].size(), fp, rng), kQ);
}

FormGrid reduce(const FormGrid& g, Field fp) {
  FormGrid out = g;
  for (auto& row : out)
    for (auto& e : row) e = e.reduce(fp);
  return out;
}

std::string grid_text(const FormGrid& g) {
  std::string out;
  for (const auto& row : g) {
    out += "[ ";
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? " , " : "") + row[c].to_string();
    out += " ]\n";
  }
  return out;
}

struct Trial {
  bool closed_form = false;
  bool enumeration = false;
  bool closed_form_mod = false;
  std::string matrix;
};

// psi: 3 x 4 linear block of the M(5,1) X0 shape.
Trial trial_m51(Field fp, Rng& rng, bool plant) {
  FormGrid g = random_grid(3, 4, 1, rng);
  if (plant) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        for (auto& row : g) row[0] = Form(kQ, 1);
        break;
      case 1:
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) g[r][c] = Form(kQ, 1);
        break;
      default:
        for (std::size_t c = 0; c < 3; ++c) g[0][c] = Form(kQ, 1);
    }
    g = recombine(g, fp, rng);
  }
  const KroneckerModule psi(kQ, g);
  const KroneckerModule reduced = psi.reduce(fp);
  return {semistable_3x4(psi), king_semistable(reduced).semistable, semistable_3x4(reduced), grid_text(g)};
}

// phi: 5 x 5 linear block of the M(5,0) X0 shape; planted trials get a q-column
// subspace landing in a q-dimensional row subspace (strictly semistable).
Trial trial_m50(Field fp, Rng& rng, bool plant) {
  for (;;) {
    FormGrid g = random_grid(5, 5, 1, rng);
    if (plant) {
      const int q = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int r = q; r < 5; ++r)
        for (int c = 0; c < q; ++c) g[r][c] = Form(kQ, 1);
      g = recombine(g, fp, rng);
    }
    // The enumeration side needs a presentation that stays injective mod p.
    if (determinant(reduce(g, fp), fp, 5).is_zero()) continue;
    const KroneckerModule psi(kQ, g);
    const KroneckerModule reduced = psi.reduce(fp);
    return {stable_5x5(psi), king_stable(reduced), stable_5x5(reduced), grid_text(g)};
  }
}

M53X0Battery battery(const FormGrid& g) {
  std::vector<Form> q1, q2, l;
  for (const auto& row : g) {
    q1.push_back(row[0]);
    q2.push_back(row[1]);
    l.push_back(row[2]);
  }
  return m53_x0_battery(q1, q2, l);
}

// [q1 q2 l]: the M(5,3) X0 shape 2O(-2) + O(-1) -> 3O. Passing the battery means
// neither forbidden form occurs.
Trial trial_m53(Field fp, Rng& rng, bool plant) {
  FormGrid g(3, std::vector<Form>(3));
  for (auto& row : g) {
    row[0] = random_form(kQ, 2, rng, kBound);
    row[1] = random_form(kQ, 2, rng, kBound);
    row[2] = random_form(kQ, 1, rng, kBound);
  }
  if (plant) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      g[1][2] = Form(kQ, 1);
      g[2][2] = Form(kQ, 1);
    } else {
      g[0][2] = Form(kQ, 1);
      g[0][1] = g[0][0].scaled(random_scalar(kQ, rng, kBound));
    }
  }
  // Row mixing, quadric column mixing, and adding linear multiples of the l column.
  g = left_multiply(unimodular_mod(3, fp, rng), g, kQ);
  const Matrix mix = unimodular_mod(2, fp, rng);
  const Form m0 = random_form(kQ, 1, rng, kBound), m1 = random_form(kQ, 1, rng, kBound);
  for (auto& row : g) {
    const Form a = row[0], b = row[1];
    row[0] = a.scaled(mix.at(0, 0)) + b.scaled(mix.at(1, 0)) + m0 * row[2];
    row[1] = a.scaled(mix.at(0, 1)) + b.scaled(mix.at(1, 1)) + m1 * row[2];
  }
  const FormGrid r = reduce(g, fp);
  return {battery(g).passes(), !m53_x0_forbidden_by_enumeration({r[0][0], r[1][0], r[2][0]}, {r[0][1], r[1][1], r[2][1]},
                                                                {r[0][2], r[1][2], r[2][2]}),
          battery(r).passes(), grid_text(g)};
}

}  // namespace

OracleReport oracle_compare(const OracleRequest& req) {
  if (req.label != Label::X0) throw DomainError("oracle-compare covers the X0 strata only");
  if (!(req.space.r == 5 && (req.space.chi == 3 || req.space.chi == 1 || req.space.chi == 0)))
    throw DomainError("oracle-compare covers M(5,3), M(5,1) and M(5,0)");
  const Field fp = Field::prime(req.prime);
  auto run = [&](Rng& rng, bool plant) {
    switch (req.space.chi) {
      case 3: return trial_m53(fp, rng, plant);
      case 1: return trial_m51(fp, rng, plant);
      default: return trial_m50(fp, rng, plant);
    }
  };
  std::vector<Trial> results(req.trials);
  parallel_for(req.trials, [&](std::size_t i) {
    Rng rng(req.seed * 0x9E3779B97F4A7C15ULL + i);
    const bool plant = std::uniform_real_distribution<double>(0, 1)(rng) < req.planted_fraction;
    results[i] = run(rng, plant);
  });
  OracleReport report;
  report.trials = req.trials;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Trial& t = results[i];
    if (t.enumeration) ++report.positives;
    if (t.closed_form == t.enumeration)
      ++report.lift_agreements;
    else
      report.lift_changes.push_back(i);
    if (t.closed_form_mod == t.enumeration)
      ++report.agreements;
    else
      report.disagreements.push_back({i, t.matrix, t.closed_form_mod, t.enumeration});
  }
  return report;
}

}  // namespace quintic
