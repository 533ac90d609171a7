#include "quintic/gallery.hpp"

#include <algorithm>

#include "quintic/error.hpp"
#include "quintic/kronecker.hpp"

namespace quintic {

namespace {

Form var(Field f, int i) { return Form::variable(f, i); }

// Automorphism of a twist sum: invertible constants on equal twists, random forms
// from lower to higher twists when `with_forms`.
GradedMorphism random_automorphism(const TwistSum& t, Field f, Rng& rng, int bound, bool with_forms) {
  const std::size_t n = t.size();
  FormGrid e(n, std::vector<Form>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const int d = t[k] - t[l];
      e[k][l] = (d > 0 && with_forms) ? random_form(f, d, rng, bound) : Form(f, d);
    }
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && t[j] == t[i]) ++j;
    const Matrix g = random_invertible(f, j - i, rng, bound);
    for (std::size_t a = i; a < j; ++a)
      for (std::size_t b = i; b < j; ++b) e[a][b] = Form::constant(g.at(a - i, b - i)).with_degree(0);
    i = j;
  }
  return GradedMorphism(f, t, t, std::move(e));
}

std::optional<std::string> normalize_sublabel(const std::optional<std::string>& s) {
  if (s && *s == "X0\\X01") return std::string("X0∖X01");
  return s;
}

// Random morphism of the primal shape with some blocks replaced by normal forms.
GradedMorphism build_candidate(const SampleRequest& req, Rng& rng) {
  const Field f = req.field;
  const int bound = req.coefficient_bound;
  const int chi = req.space.chi;
  const std::string sub = req.sublabel.value_or("");
  GradedMorphism base = random_shape(req.space, req.label, f, rng, bound);
  FormGrid e = base.entries();
  auto rl = [&]() { return random_form(f, 1, rng, bound); };

  if (chi == 3 && req.label == Label::X0 && sub == "X01") {
    // Linear column spanning only two dimensions; sorted source is (-1, -2, -2).
    const Form l1 = rl(), l2 = rl();
    const Scalar a = random_scalar(f, rng, bound), b = random_scalar(f, rng, bound);
    e[0][0] = l1;
    e[1][0] = l2;
    e[2][0] = (l1.scaled(a) + l2.scaled(b)).with_degree(1);
  } else if (chi == 3 && req.label == Label::X2 && sub == "X21") {
    // Rows 1,2 have twist -1: G2 [[l, 0, -n], [0, l, -m]] G3.
    const Form l = rl(), m = rl(), n = rl();
    FormGrid block = {{l, Form(f, 1), -n}, {Form(f, 1), l, -m}};
    block = right_multiply(left_multiply(random_invertible(f, 2, rng, bound), block, f),
                           random_invertible(f, 3, rng, bound), f);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) e[1 + i][j] = block[i][j];
  } else if (chi == 1 && req.label == Label::X0 && (sub == "X01" || sub == "X02")) {
    const Form x = var(f, 0), y = var(f, 1), z = var(f, 2), zero(f, 1);
    FormGrid psi;
    if (sub == "X01") {
      psi = {{y, -x, zero, zero}, {zero, y, -x, zero}, {z, zero, zero, -x}};
    } else {
      psi = {{-y, x, zero, rl()}, {-z, zero, x, rl()}, {zero, -z, y, rl()}};
    }
    psi = right_multiply(left_multiply(random_invertible(f, 3, rng, bound), psi, f),
                         random_invertible(f, 4, rng, bound), f);
    // Sorted target is (0, -1, -1, -1).
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) e[1 + i][j] = psi[i][j];
  } else if (chi == 1 && req.label == Label::X1 && sub == "X11") {
    // Sorted source is (-2, -3): column 0 holds the two quadrics.
    const Form l = rl();
    e[0][0] = l * rl();
    e[1][0] = l * rl();
  } else if (chi == 0 && req.label == Label::X0 && sub == "strictly-semistable") {
    const std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = m; j < 5; ++j) e[i][j] = Form(f, 1);
    e = right_multiply(left_multiply(random_invertible(f, 5, rng, bound), e, f), random_invertible(f, 5, rng, bound), f);
  }
  GradedMorphism phi(f, base.source(), base.target(), std::move(e));
  return random_recombination(phi, rng, bound);
}

}  // namespace

Scalar random_scalar(Field f, Rng& rng, int bound) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return Scalar::from_int(f, d(rng));
  }
  std::uniform_int_distribution<long> d(0, long(f.modulus()) - 1);
  return Scalar::from_int(f, d(rng));
}

Form random_form(Field f, int degree, Rng& rng, int bound) {
  if (degree < 0) return Form(f, degree);
  Vector c;
  for (std::size_t i = 0; i < monomial_count(degree); ++i) c.push_back(random_scalar(f, rng, bound));
  return Form::from_coefficients(f, degree, c);
}

Matrix random_invertible(Field f, std::size_t n, Rng& rng, int bound) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng, bound);
    if (!determinant(m).is_zero()) return m;
  }
}

FormGrid left_multiply(const Matrix& g, const FormGrid& m, Field f) {
  FormGrid out(g.rows(), std::vector<Form>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      Form acc(f, m[0][j].degree());
      for (std::size_t k = 0; k < g.cols(); ++k) acc += m[k][j].scaled(g.at(i, k));
      out[i][j] = acc.with_degree(m[0][j].degree());
    }
  return out;
}

FormGrid right_multiply(const FormGrid& m, const Matrix& g, Field f) {
  FormGrid out(m.size(), std::vector<Form>(g.cols()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Form acc(f, m[i][0].degree());
      for (std::size_t k = 0; k < g.rows(); ++k) acc += m[i][k].scaled(g.at(k, j));
      out[i][j] = acc.with_degree(m[i][0].degree());
    }
  return out;
}

GradedMorphism random_recombination(const GradedMorphism& phi, Rng& rng, int bound) {
  const auto b = random_automorphism(phi.target(), phi.field(), rng, bound, true);
  const auto a = random_automorphism(phi.source(), phi.field(), rng, bound, true);
  return compose(b, compose(phi, a));
}

GradedMorphism random_constant_recombination(const GradedMorphism& phi, Rng& rng, int bound) {
  const auto b = random_automorphism(phi.target(), phi.field(), rng, bound, false);
  const auto a = random_automorphism(phi.source(), phi.field(), rng, bound, false);
  return compose(b, compose(phi, a));
}

GradedMorphism quintic_with_point(const Form& l1, const Form& l2, const Form& f1, const Form& f2) {
  const Field f = l1.field();
  if (l1.degree() != 1 || l2.degree() != 1 || f1.degree() != 4 || f2.degree() != 4)
    throw DegreeError("quintic_with_point expects two linear and two quartic forms");
  if (linear_span_dim({l1, l2}) != 2) throw DomainError("quintic_with_point: the linear forms are dependent");
  if ((l1 * f2 - l2 * f1).is_zero()) throw DomainError("quintic_with_point: l1 f2 - l2 f1 vanishes");
  return GradedMorphism::arrange(f, {-3, -3}, {-2, 1}, {{l1, l2}, {f1, f2}});
}

GradedMorphism twisted_structure_sheaf(const Form& q) {
  if (q.is_zero()) throw DomainError("twisted_structure_sheaf: the quintic is zero");
  if (q.degree() != 5) throw DegreeError("twisted_structure_sheaf expects a quintic, got degree " + std::to_string(q.degree()));
  return GradedMorphism::arrange(q.field(), {-4}, {1}, {{q}});
}

GradedMorphism flag_section(const Form& g, const Form& h, const std::optional<Form>& line) {
  const Field f = h.field();
  if (line) {
    if (line->is_zero() || line->degree() != 1) throw DegreeError("flag_section: the line must be a linear form");
    // New coordinates (line, two standard variables completing it).
    Matrix m(f, 3, 3);
    for (int c = 0; c < 3; ++c) {
      Exponent e{0, 0, 0};
      e[c] = 1;
      m.at(0, c) = line->coefficient(e);
    }
    std::optional<Matrix> inv;
    for (int a = 0; a < 3 && !inv; ++a)
      for (int b = a + 1; b < 3 && !inv; ++b) {
        for (int c = 0; c < 3; ++c) {
          m.at(1, c) = Scalar::from_int(f, c == a);
          m.at(2, c) = Scalar::from_int(f, c == b);
        }
        inv = inverse(m);
      }
    // Old variables in terms of new ones, and back.
    std::array<Form, 3> to_new, to_old;
    for (int v = 0; v < 3; ++v) {
      Form old_in_new(f, 1), new_in_old(f, 1);
      for (int w = 0; w < 3; ++w) {
        Exponent e{0, 0, 0};
        e[w] = 1;
        old_in_new += Form::monomial(inv->at(v, w), e);
        new_in_old += Form::monomial(m.at(v, w), e);
      }
      to_new[v] = old_in_new.with_degree(1);
      to_old[v] = new_in_old.with_degree(1);
    }
    const GradedMorphism local = flag_section(g.substitute(to_new), h.substitute(to_new));
    FormGrid e = local.entries();
    for (auto& row : e)
      for (auto& x : row) x = x.substitute(to_old).with_degree(x.degree());
    return GradedMorphism(f, local.source(), local.target(), std::move(e));
  }
  if (g.is_zero()) throw DomainError("flag_section: g is zero");
  if (g.degree() != 2 || h.degree() != 5) throw DegreeError("flag_section expects a quadric g and a quintic h");
  Form h1(f, 5), h2(f, 4);
  for (const auto& [e, c] : h.terms()) {
    if (e[0] == 0) {
      h1 += Form::monomial(c, e);
    } else {
      h2 += Form::monomial(c, {e[0] - 1, e[1], e[2]});
    }
  }
  for (const auto& [e, c] : g.terms())
    if (e[0] != 0) throw DomainError("flag_section: g must not involve x");
  const auto q = h1.with_degree(5).divide_exact(g);
  if (!q) throw DomainError("flag_section: g does not divide the x-free part of h");
  return GradedMorphism::arrange(f, {-3, -1}, {0, 1}, {{*q, var(f, 0)}, {-h2.with_degree(4), g}});
}

GradedMorphism extension_block(const GradedMorphism& sub, const GradedMorphism& quot, const GradedMorphism& delta) {
  if (!(delta.source() == quot.source()) || !(delta.target() == sub.target()))
    throw DegreeError("extension_block: delta must map source(quot) to target(sub)");
  if (!validate(delta) || !validate(sub) || !validate(quot)) throw DegreeError("extension_block: ungraded input");
  const Field f = sub.field();
  std::vector<int> source = quot.source().twists(), target = quot.target().twists();
  source.insert(source.end(), sub.source().twists().begin(), sub.source().twists().end());
  target.insert(target.end(), sub.target().twists().begin(), sub.target().twists().end());
  FormGrid e(target.size(), std::vector<Form>(source.size()));
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j) {
      const bool top = i < quot.rows(), left = j < quot.cols();
      if (top && left) e[i][j] = quot.at(i, j);
      else if (top) e[i][j] = Form(f, target[i] - source[j]);
      else if (left) e[i][j] = delta.at(i - quot.rows(), j);
      else e[i][j] = sub.at(i - quot.rows(), j - quot.cols());
    }
  return minimize(GradedMorphism::arrange(f, source, target, e));
}

GradedMorphism random_shape(ModuliSpaceId space, Label label, Field f, Rng& rng, int bound) {
  const DualLink link = dual_link(space);
  const CatalogueEntry* row = find_entry(link.primal, label);
  if (!row) throw DomainError(label_name(label) + " is not a stratum of " + space.to_string());
  const auto [src, tgt] = shape_of(space, label);
  const bool primal = is_primal(space);
  FormGrid e(tgt.size(), std::vector<Form>(src.size()));
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) {
      // Zero blocks are recorded as (target, source) twists of the primal shape.
      const std::pair<int, int> key = primal ? std::pair{tgt[i], src[j]}
                                             : std::pair{-3 + link.k - src[j], -3 + link.k - tgt[i]};
      const bool zero = std::find(row->zero_blocks.begin(), row->zero_blocks.end(), key) != row->zero_blocks.end();
      e[i][j] = zero ? Form(f, tgt[i] - src[j]) : random_form(f, tgt[i] - src[j], rng, bound);
    }
  return GradedMorphism::arrange(f, src, tgt, e);
}

GradedMorphism sample_stratum(const SampleRequest& in) {
  if (in.retry_cap < 1) throw DomainError("sample_stratum: retry_cap must be at least 1");
  SampleRequest req = in;
  req.sublabel = normalize_sublabel(in.sublabel);
  if (!is_primal(req.space)) {
    const DualLink link = dual_link(req.space);
    SampleRequest primal = req;
    primal.space = link.primal;
    return dual_resolution(sample_stratum(primal), link.k);
  }
  Rng rng(req.seed);
  for (int attempt = 0; attempt < req.retry_cap; ++attempt) {
    GradedMorphism phi = build_candidate(req, rng);
    const StratumReport r = classify(req.space, phi);
    if (r.label == req.label && (!req.sublabel || r.sublabel == req.sublabel)) return phi;
  }
  throw DomainError("sample_stratum: no " + label_name(req.label) + (req.sublabel ? " " + *req.sublabel : "") +
                    " sample of " + req.space.to_string() + " after " + std::to_string(req.retry_cap) + " attempts");
}

}  // namespace quintic

namespace quintic {

std::pair<FormGrid, Form> common_factor_kronecker(Field f, Rng& rng, int bound) {
  const Form x = Form::variable(f, 0), y = Form::variable(f, 1), z = Form::variable(f, 2), o(f, 1);
  auto yz = [&] { return y.scaled(random_scalar(f, rng, bound)) + z.scaled(random_scalar(f, rng, bound)); };
  for (;;) {
    FormGrid psi0(3, std::vector<Form>(4, o));
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0:  // zero row
        for (std::size_t r = 1; r < 3; ++r)
          for (auto& e : psi0[r]) e = yz();
        break;
      case 1:  // columns in the span of two
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 2; ++c) psi0[r][c] = yz();
        break;
      case 2:  // 2 x 3 zero block
        for (auto& e : psi0[0]) e = yz();
        psi0[1][0] = yz();
        psi0[2][0] = yz();
        break;
      case 3:  // [y z] and its transpose as diagonal blocks
        psi0[0][0] = y;
        psi0[0][1] = z;
        psi0[1][2] = y;
        psi0[2][2] = z;
        break;
      default:  // 3 x 2 block [[y,0],[z,y],[0,z]]
        psi0[0][0] = y;
        psi0[1][0] = z;
        psi0[1][1] = y;
        psi0[2][1] = z;
    }
    FormGrid psi = psi0;
    for (auto& row : psi)
      for (auto& e : row) e += x.scaled(random_scalar(f, rng, bound));
    psi = right_multiply(left_multiply(random_invertible(f, 3, rng, bound), psi, f), random_invertible(f, 4, rng, bound), f);
    // Change of coordinates so the common factor is not always x.
    const Matrix g = random_invertible(f, 3, rng, bound);
    const std::array<Form, 3> image = {
        x.scaled(g.at(0, 0)) + y.scaled(g.at(1, 0)) + z.scaled(g.at(2, 0)),
        x.scaled(g.at(0, 1)) + y.scaled(g.at(1, 1)) + z.scaled(g.at(2, 1)),
        x.scaled(g.at(0, 2)) + y.scaled(g.at(1, 2)) + z.scaled(g.at(2, 2)),
    };
    for (auto& row : psi)
      for (auto& e : row) e = e.substitute(image);
    bool nonzero = false;
    for (const auto& m : maximal_minors(psi, f)) nonzero = nonzero || !m.is_zero();
    if (nonzero) return {psi, image[0]};
  }
}

}  // namespace quintic
