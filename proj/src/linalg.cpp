#include "movsurf/linalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "movsurf/errors.hpp"
#include "movsurf/interpolate.hpp"

namespace movsurf {

namespace {

// Row-scaled integer copy; `scale` receives the product of row multipliers.
std::vector<Integer> integer_rows(const ExactMatrix& a, Integer& scale) {
  std::vector<Integer> out(a.rows() * a.cols());
  scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational& q = a(r, c);
      Integer& dst = out[r * a.cols() + c];
      mpz_divexact(dst.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      dst *= q.get_num();
    }
    scale *= l;
  }
  return out;
}

// Fraction-free echelon elimination in place. Returns the rank; the last
// pivot value and the row-swap sign are reported for square determinants.
std::size_t bareiss(std::vector<Integer>& m, std::size_t rows, std::size_t cols, int& sign,
                    Integer& last_pivot) {
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * cols + c]; };
  Integer prev = 1;
  Integer tmp;
  sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
      sign = -sign;
    }
    const Integer& piv = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& target = at(i, j);
        target *= piv;
        if (factor != 0) {
          tmp = factor * at(rank, j);
          target -= tmp;
        }
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  std::set<std::size_t> seen;
  for (std::size_t i : idx) {
    if (i >= bound) throw Error(ErrorCode::InvalidArgument, std::string(what) + " index out of range");
    if (!seen.insert(i).second) throw Error(ErrorCode::InvalidArgument, std::string("duplicate ") + what + " index");
  }
}

}  // namespace

Rational det(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer scale;
  std::vector<Integer> m = integer_rows(a, scale);
  int sign = 1;
  Integer last;
  std::size_t r = bareiss(m, n, n, sign, last);
  if (r < n) return 0;
  Integer value = m[n * n - 1];
  if (sign < 0) value = -value;
  return make_rational(value, scale);
}

std::size_t rank(const ExactMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Integer scale;
  std::vector<Integer> m = integer_rows(a, scale);
  int sign = 1;
  Integer last;
  return bareiss(m, a.rows(), a.cols(), sign, last);
}

ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivots) {
  ExactMatrix m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& a) {
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix minor(const ExactMatrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  check_indices(rows, a.rows(), "row");
  check_indices(cols, a.cols(), "column");
  ExactMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  }
  std::vector<Label> rl, cl;
  if (!a.row_labels().empty()) {
    for (std::size_t i : rows) rl.push_back(a.row_labels()[i]);
  }
  if (!a.col_labels().empty()) {
    for (std::size_t j : cols) cl.push_back(a.col_labels()[j]);
  }
  out.set_labels(std::move(rl), std::move(cl));
  return out;
}

ExactMatrix select_columns(const ExactMatrix& a, std::span<const std::size_t> cols) {
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return minor(a, rows, cols);
}

ExactMatrix select_rows(const ExactMatrix& a, std::span<const std::size_t> rows) {
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return minor(a, rows, cols);
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "row count mismatch in hconcat");
  ExactMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  if (!a.col_labels().empty() && !b.col_labels().empty()) {
    std::vector<Label> cl = a.col_labels();
    cl.insert(cl.end(), b.col_labels().begin(), b.col_labels().end());
    out.set_labels(a.row_labels(), std::move(cl));
  }
  return out;
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "solve needs a square matrix");
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side has wrong height");
  std::size_t n = a.rows();
  ExactMatrix aug = hconcat(a, b);
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  ExactMatrix out(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(i, c) = r(i, n + c);
  }
  return out;
}

SparsePoly poly_det(const PolyMatrix& a, int degree_bound) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  auto f = [&](std::span<const Rational> pt) { return det(a.evaluate(pt)); };
  SparsePoly result = interpolate_total_degree(a.vars(), degree_bound, f);
  for (const auto& pt : held_out_points(var_count(a.vars()), degree_bound, 2)) {
    if (result.eval(pt) != f(pt)) {
      throw Error(ErrorCode::Interpolation,
                  "determinant degree exceeds bound " + std::to_string(degree_bound));
    }
  }
  return result;
}

}  // namespace movsurf
