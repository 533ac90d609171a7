#include "quintic/graded.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "quintic/error.hpp"

namespace quintic {

namespace {

long binom2(long d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

std::vector<std::size_t> descending_order(const std::vector<int>& twists) {
  std::vector<std::size_t> order(twists.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return twists[a] > twists[b]; });
  return order;
}

}  // namespace

TwistSum::TwistSum(std::vector<int> twists) : twists_(std::move(twists)) {
  std::stable_sort(twists_.begin(), twists_.end(), std::greater<>());
}

int TwistSum::sum() const { return std::accumulate(twists_.begin(), twists_.end(), 0); }

std::size_t TwistSum::multiplicity(int t) const { return std::size_t(std::count(twists_.begin(), twists_.end(), t)); }

std::vector<std::size_t> TwistSum::indices(int t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < twists_.size(); ++i)
    if (twists_[i] == t) out.push_back(i);
  return out;
}

std::size_t TwistSum::h0(int m) const {
  std::size_t total = 0;
  for (int t : twists_) total += std::size_t(binom2(t + m));
  return total;
}

std::string TwistSum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < twists_.size();) {
    std::size_t j = i;
    while (j < twists_.size() && twists_[j] == twists_[i]) ++j;
    if (!out.empty()) out += " ";
    out += "O(" + std::to_string(twists_[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

GradedMorphism::GradedMorphism(Field f, TwistSum source, TwistSum target, FormGrid entries)
    : field_(f), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != target_.size())
    throw DegreeError("matrix has " + std::to_string(entries_.size()) + " rows but the target has " +
                      std::to_string(target_.size()) + " summands");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != source_.size())
      throw DegreeError("row " + std::to_string(i + 1) + " has " + std::to_string(entries_[i].size()) +
                        " entries but the source has " + std::to_string(source_.size()) + " summands");
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      Form& e = entries_[i][j];
      if (!(e.field() == f)) throw FieldMismatch("matrix entry over " + e.field().name());
      if (e.is_zero()) e = Form(f, entry_degree(i, j));
    }
  }
}

GradedMorphism GradedMorphism::arrange(Field f, const std::vector<int>& source, const std::vector<int>& target,
                                       const FormGrid& entries) {
  if (entries.size() != target.size()) throw DegreeError("row count does not match the target");
  const auto rows = descending_order(target);
  const auto cols = descending_order(source);
  FormGrid sorted(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = entries[rows[i]];
    if (row.size() != source.size()) throw DegreeError("column count does not match the source");
    for (std::size_t j : cols) sorted[i].push_back(row[j]);
  }
  return GradedMorphism(f, TwistSum(source), TwistSum(target), std::move(sorted));
}

GradedMorphism GradedMorphism::identity(Field f, const TwistSum& t) {
  FormGrid e(t.size(), std::vector<Form>(t.size(), Form(f, 0)));
  for (std::size_t i = 0; i < t.size(); ++i) e[i][i] = Form::constant(Scalar::one(f));
  return GradedMorphism(f, t, t, std::move(e));
}

FormGrid GradedMorphism::block(int t, int s) const {
  FormGrid out;
  const auto cols = source_.indices(s);
  for (std::size_t i : target_.indices(t)) {
    std::vector<Form> row;
    for (std::size_t j : cols) row.push_back(entries_[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

GradedMorphism GradedMorphism::reduce(Field target) const {
  FormGrid e = entries_;
  for (auto& row : e)
    for (auto& x : row) x = x.reduce(target);
  return GradedMorphism(target, source_, target_, std::move(e));
}

std::string GradedMorphism::to_string() const {
  std::string out = source_.to_string() + " -> " + target_.to_string() + "\n";
  for (const auto& row : entries_) {
    out += "[ ";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " , " : "") + row[j].to_string();
    out += " ]\n";
  }
  return out;
}

bool validate(const GradedMorphism& phi) {
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      const Form& e = phi.at(i, j);
      if (!(e.field() == phi.field())) return false;
      if (e.is_zero()) continue;
      const int d = phi.entry_degree(i, j);
      if (d < 0 || e.degree() != d) return false;
    }
  return true;
}

GradedMorphism compose(const GradedMorphism& psi, const GradedMorphism& phi) {
  if (!(phi.target() == psi.source()))
    throw DegreeError("compose: " + phi.target().to_string() + " does not match " + psi.source().to_string());
  if (!(phi.field() == psi.field())) throw FieldMismatch("compose across fields");
  const Field f = phi.field();
  FormGrid e(psi.rows(), std::vector<Form>(phi.cols()));
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      Form acc(f, psi.target()[i] - phi.source()[j]);
      for (std::size_t k = 0; k < psi.cols(); ++k) acc += psi.at(i, k) * phi.at(k, j);
      e[i][j] = acc.is_zero() ? Form(f, psi.target()[i] - phi.source()[j]) : acc;
    }
  GradedMorphism out(f, phi.source(), psi.target(), std::move(e));
  if (!validate(out)) throw DegreeError("compose produced an ungraded matrix");
  return out;
}

Form determinant(const FormGrid& m, Field f, int degree) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Form::constant(Scalar::one(f));
  if (n > 20) throw DomainError("determinant: matrix too large for cofactor expansion");
  // memo[mask] = determinant of rows popcount(mask).. against the columns outside mask.
  std::vector<std::optional<Form>> memo(std::size_t(1) << n);
  const std::size_t full = (std::size_t(1) << n) - 1;
  auto rec = [&](auto&& self, std::size_t mask) -> Form {
    if (mask == full) return Form::constant(Scalar::one(f));
    if (memo[mask]) return *memo[mask];
    const std::size_t r = std::size_t(__builtin_popcountll(mask));
    Form acc(f, 0);
    bool negative = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t(1) << j)) continue;
      if (!m[r][j].is_zero()) {
        Form sub = self(self, mask | (std::size_t(1) << j));
        if (!sub.is_zero()) {
          Form term = m[r][j] * sub;
          acc += negative ? -term : term;
        }
      }
      negative = !negative;
    }
    memo[mask] = acc;
    return acc;
  };
  Form d = rec(rec, 0);
  return d.is_zero() ? Form(f, degree) : d;
}

Form determinant(const GradedMorphism& phi) {
  if (!phi.is_square()) throw DomainError("determinant of a non-square morphism");
  return determinant(phi.entries(), phi.field(), phi.target().sum() - phi.source().sum());
}

bool is_injective(const GradedMorphism& phi) { return !determinant(phi).is_zero(); }

GradedMorphism dual_resolution(const GradedMorphism& phi, int k) {
  if (!is_injective(phi)) throw DomainError("dual_resolution needs an injective morphism");
  std::vector<int> source, target;
  for (int b : phi.target().twists()) source.push_back(-3 + k - b);
  for (int a : phi.source().twists()) target.push_back(-3 + k - a);
  FormGrid t(phi.cols(), std::vector<Form>(phi.rows()));
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) t[j][i] = phi.at(i, j);
  return GradedMorphism::arrange(phi.field(), source, target, t);
}

GradedMorphism minimize(const GradedMorphism& phi) {
  GradedMorphism cur = phi;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t j = 0; j < cur.cols() && !pivot; ++j)
      for (std::size_t i = 0; i < cur.rows(); ++i)
        if (cur.entry_degree(i, j) == 0 && !cur.at(i, j).is_zero()) {
          pivot = {i, j};
          break;
        }
    if (!pivot) return cur;
    const auto [pi, pj] = *pivot;
    const Scalar inv = cur.at(pi, pj).leading_coefficient().inverse();
    std::vector<int> source, target;
    for (std::size_t j = 0; j < cur.cols(); ++j)
      if (j != pj) source.push_back(cur.source()[j]);
    for (std::size_t i = 0; i < cur.rows(); ++i)
      if (i != pi) target.push_back(cur.target()[i]);
    FormGrid e;
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      if (i == pi) continue;
      std::vector<Form> row;
      for (std::size_t j = 0; j < cur.cols(); ++j) {
        if (j == pj) continue;
        Form v = cur.at(i, j);
        if (!cur.at(i, pj).is_zero() && !cur.at(pi, j).is_zero()) v -= (cur.at(i, pj) * cur.at(pi, j)).scaled(inv);
        row.push_back(v);
      }
      e.push_back(std::move(row));
    }
    cur = GradedMorphism(cur.field(), TwistSum(source), TwistSum(target), std::move(e));
  }
}

HilbertData hilbert(const GradedMorphism& phi) {
  if (!phi.is_square()) throw DomainError("hilbert: the t^2 coefficient does not vanish (non-square morphism)");
  HilbertData h;
  h.r = phi.target().sum() - phi.source().sum();
  long chi = 0;
  for (int b : phi.target().twists()) chi += (long(b) + 1) * (long(b) + 2) / 2;
  for (int a : phi.source().twists()) chi -= (long(a) + 1) * (long(a) + 2) / 2;
  h.chi = int(chi);
  if (h.r <= 0) throw DomainError("hilbert: multiplicity " + std::to_string(h.r) + " is not positive");
  return h;
}

std::vector<Form> maximal_minors(const FormGrid& block, Field f) {
  const std::size_t m = block.size();
  const std::size_t n = m ? block[0].size() : 0;
  if (m == 0 || n == 0) throw DomainError("maximal_minors of an empty block");
  if (m == 1 || n == 1) {
    // A vector's maximal minors are its entries.
    std::vector<Form> out;
    for (const auto& row : block)
      for (const auto& e : row) out.push_back(e);
    if (out.size() != 2) return out;
  }
  if (m + 1 != n && n + 1 != m)
    throw DomainError("maximal_minors needs a k x (k+1) or (k+1) x k block, got " + std::to_string(m) + " x " +
                      std::to_string(n));
  std::vector<Form> out;
  for (std::size_t del = 0; del < std::max(m, n); ++del) {
    FormGrid sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (m > n && i == del) continue;
      std::vector<Form> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (n > m && j == del) continue;
        row.push_back(block[i][j]);
      }
      sub.push_back(std::move(row));
    }
    Form d = determinant(sub, f);
    out.push_back(del % 2 ? -d : d);
  }
  // All minors of a graded block share one degree; restamp zeros with it.
  auto nonzero = std::find_if(out.begin(), out.end(), [](const Form& x) { return !x.is_zero(); });
  if (nonzero != out.end()) {
    const int d = nonzero->degree();
    for (auto& x : out)
      if (x.is_zero()) x = Form(f, d);
  }
  return out;
}

std::vector<Form> maximal_minors(const GradedMorphism& phi, const std::vector<std::size_t>& rows) {
  FormGrid block;
  for (std::size_t i : rows) {
    if (i >= phi.rows()) throw DomainError("maximal_minors: row index out of range");
    block.push_back(phi.entries()[i]);
  }
  return maximal_minors(block, phi.field());
}

bool equivalent_up_to_permutation(const GradedMorphism& a, const GradedMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()) || !(a.field() == b.field())) return false;
  if (a == b) return true;
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  // Permute rows within twist groups; match columns greedily within twist groups.
  auto columns_match = [&]() {
    std::vector<bool> used(a.cols(), false);
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      bool matched = false;
      for (std::size_t ja = 0; ja < a.cols() && !matched; ++ja) {
        if (used[ja] || a.source()[ja] != b.source()[jb]) continue;
        bool same = true;
        for (std::size_t i = 0; i < a.rows() && same; ++i) same = a.at(perm[i], ja) == b.at(i, jb);
        if (same) used[ja] = matched = true;
      }
      if (!matched) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == perm.size()) return columns_match();
    for (std::size_t q = pos; q < perm.size(); ++q) {
      if (a.target()[perm[q]] != b.target()[pos]) continue;
      std::swap(perm[pos], perm[q]);
      if (self(self, pos + 1)) return true;
      std::swap(perm[pos], perm[q]);
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace quintic
