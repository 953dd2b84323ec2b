#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "movsurf/poly.hpp"
#include "movsurf/rational.hpp"

namespace movsurf {

// Row or column index label: a parameter monomial, optionally carrying the
// x^gamma multiplier of its source block, plus a block number for direct sums
// without a gamma (Koszul components, the q-part of MT).
struct Label {
  Vars vars = Vars::Tensor;
  Exponents monomial;
  std::optional<Exponents> gamma;
  int block = 0;

  std::string to_string() const;
  friend bool operator==(const Label&, const Label&) = default;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  bool has_labels() const { return !row_labels_.empty() || !col_labels_.empty(); }
  void set_labels(std::vector<Label> row_labels, std::vector<Label> col_labels);

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& other) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;
  bool is_zero() const;

  // Compares entries only.
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
};

// Dense matrix of polynomials sharing one variable set.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, Vars vars = Vars::Implicit);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Vars vars() const { return vars_; }

  SparsePoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const SparsePoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix evaluate(std::span<const Rational> point) const;
  int max_entry_degree() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Vars vars_;
  std::vector<SparsePoly> data_;
};

}  // namespace movsurf
