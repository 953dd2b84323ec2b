#include "movsurf/matrix.hpp"

#include "movsurf/errors.hpp"

namespace movsurf {

std::string Label::to_string() const {
  std::vector<std::string> factors;
  if (monomial.degree() > 0) factors.push_back(monomial_to_string(vars, monomial));
  if (gamma) {
    for (std::size_t i = 0; i < 4; ++i) {
      int g = (*gamma)[i];
      if (g == 0) continue;
      factors.push_back("x" + std::to_string(i + 1) + (g > 1 ? "^" + std::to_string(g) : ""));
    }
  }
  std::string out = block != 0 ? "b" + std::to_string(block) + ":" : "";
  if (factors.empty()) return out + "1";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  return out;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

std::vector<Rational> ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ExactMatrix::set_labels(std::vector<Label> row_labels, std::vector<Label> col_labels) {
  if ((!row_labels.empty() && row_labels.size() != rows_) ||
      (!col_labels.empty() && col_labels.size() != cols_)) {
    throw Error(ErrorCode::Internal, "label count does not match matrix dimensions");
  }
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  out.set_labels(col_labels_, row_labels_);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in product");
  ExactMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (other(k, c) != 0) out(r, c) += a * other(k, c);
      }
    }
  }
  return out;
}

std::vector<Rational> ExactMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in product");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, Vars vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, SparsePoly(vars)) {}

ExactMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).eval(point);
  }
  return out;
}

int PolyMatrix::max_entry_degree() const {
  int best = -1;
  for (const auto& p : data_) best = std::max(best, p.total_degree());
  return best;
}

}  // namespace movsurf
