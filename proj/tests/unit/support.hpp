#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "quintic/form.hpp"
#include "quintic/graded.hpp"

namespace quintic {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Form& f, std::ostream* os) { *os << f.to_string() << " [deg " << f.degree() << "]"; }
inline void PrintTo(const TwistSum& t, std::ostream* os) { *os << t.to_string(); }
inline void PrintTo(const GradedMorphism& m, std::ostream* os) { *os << "\n" << m.to_string(); }

}  // namespace quintic

namespace qt {

using namespace quintic;

inline const Field Q = Field::rationals();

inline Form F(const std::string& s, Field f = Q, int zero_degree = 0) { return parse_form(s, f, zero_degree); }

/// Morphism from twists in table order and entries as text.
inline GradedMorphism morph(const std::vector<int>& source, const std::vector<int>& target,
                            const std::vector<std::vector<std::string>>& cells, Field f = Q) {
  FormGrid g;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    g.emplace_back();
    for (std::size_t j = 0; j < cells[i].size(); ++j) g.back().push_back(parse_form(cells[i][j], f, target[i] - source[j]));
  }
  return GradedMorphism::arrange(f, source, target, g);
}

inline FormGrid grid(const std::vector<std::vector<std::string>>& cells, Field f = Q, int zero_degree = 1) {
  FormGrid g;
  for (const auto& row : cells) {
    g.emplace_back();
    for (const auto& c : row) g.back().push_back(parse_form(c, f, zero_degree));
  }
  return g;
}

/// Value of f at a point, by direct expansion of every term.
inline Scalar eval(const Form& f, const std::array<Scalar, 3>& p) {
  Scalar acc = Scalar::zero(f.field());
  for (const auto& [e, c] : f.terms()) {
    Scalar t = c;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) t *= p[v];
    acc += t;
  }
  return acc;
}

/// Leibniz expansion over all permutations.
inline Scalar leibniz(const std::vector<std::vector<Scalar>>& m, Field f) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(f);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar t = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i) t *= m[i][perm[i]];
    total += inversions % 2 ? -t : t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest k with a nonzero k x k minor, by exhaustive minor search.
inline std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r), cs(c);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        std::vector<std::vector<Scalar>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub.back().push_back(m.at(i, j));
        }
        if (!leibniz(sub, m.field()).is_zero()) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

inline Scalar S(long v, Field f = Q) { return Scalar::from_int(f, v); }

}  // namespace qt
