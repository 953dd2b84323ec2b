#include "movsurf/resultant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "movsurf/errors.hpp"
#include "movsurf/interpolate.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/movmat.hpp"

namespace movsurf {

namespace {

void check_triple(const Triple& f, const Shape& shape) {
  static const char* names[] = {"f1", "f2", "f3"};
  for (std::size_t i = 0; i < 3; ++i) shape.check_form(f[i], names[i]);
}

// Rows of `a` picked greedily in `order`, keeping those that raise the rank.
std::vector<std::size_t> greedy_rows(const ExactMatrix& a, std::span<const std::size_t> order) {
  std::vector<std::pair<std::size_t, std::vector<Rational>>> basis;
  std::vector<std::size_t> picked;
  for (std::size_t r : order) {
    if (picked.size() == a.cols()) break;
    std::vector<Rational> v = a.row(r);
    for (const auto& [p, b] : basis) {
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (b[c] != 0) v[c] -= f * b[c];
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    basis.emplace_back(p, std::move(v));
    picked.push_back(r);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<std::size_t> complement(std::span<const std::size_t> subset, std::size_t total) {
  std::vector<bool> in(total, false);
  for (std::size_t i : subset) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < total; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> columns_from_rows(const KoszulPair& k, std::span<const std::size_t> order) {
  std::vector<std::size_t> rows = greedy_rows(k.d0, order);
  if (rows.size() < k.d0.cols()) {
    throw Error(ErrorCode::ResultantVanishes, "the Koszul complex is not exact (resultant vanishes)");
  }
  return complement(rows, k.d0.rows());
}

}  // namespace

KoszulPair koszul_matrices(const Triple& f, int d, const Shape& shape) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "the Koszul complex needs d >= 2");
  check_triple(f, shape);
  Vars vars = shape.param_vars();
  SparsePoly f3 = f[2].pow(static_cast<unsigned>(d - 1));
  SparsePoly zero(vars);

  MonomialBasis a1 = shape.scaled_space(1);
  MonomialBasis a3 = shape.scaled_space(d - 1);
  MonomialBasis b1 = shape.scaled_space(d);
  MonomialBasis b3 = shape.scaled_space(2);

  // psi0(p,q,r) = (q f3 + r f2, p f3 - r f1, -p f2 - q f1)
  std::vector<SourceBlock> a_blocks{
      {a1.monomials(), {zero, f3, -f[1]}, std::nullopt, 1},
      {a1.monomials(), {f3, zero, -f[0]}, std::nullopt, 2},
      {a3.monomials(), {f[1], -f[0], zero}, std::nullopt, 3},
  };
  std::vector<TargetBlock> b_targets{{b1, 1}, {b1, 2}, {b3, 3}};

  // psi1(p,q,r) = p f1 + q f2 + r f3
  std::vector<SourceBlock> b_blocks{
      {b1.monomials(), {f[0]}, std::nullopt, 1},
      {b1.monomials(), {f[1]}, std::nullopt, 2},
      {b3.monomials(), {f3}, std::nullopt, 3},
  };
  std::vector<TargetBlock> c_targets{{shape.scaled_space(d + 1), 0}};

  KoszulPair k;
  k.d0 = linear_map_matrix(vars, a_blocks, b_targets);
  k.d1 = linear_map_matrix(vars, b_blocks, c_targets);
  k.d = d;
  k.shape = shape;
  return k;
}

int split_permutation_sign(std::span<const std::size_t> first, std::size_t total) {
  std::size_t inversions = 0;
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first[k] >= total || (k > 0 && first[k] <= first[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "index set must be strictly increasing and in range");
    }
    inversions += first[k] - k;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ComplexMinor complex_minor(const KoszulPair& k, std::span<const std::size_t> columns) {
  std::size_t q = k.d1.cols();
  if (columns.size() != k.d1.rows()) {
    throw Error(ErrorCode::InvalidArgument, "index set must have dim C = " +
                                                std::to_string(k.d1.rows()) + " members");
  }
  ComplexMinor out;
  out.sign = split_permutation_sign(columns, q);
  out.columns.assign(columns.begin(), columns.end());
  out.rows = complement(columns, q);
  out.m1 = det(select_columns(k.d1, out.columns));
  out.m0 = det(select_rows(k.d0, out.rows));
  return out;
}

std::vector<std::size_t> first_valid_index_set(const KoszulPair& k) {
  // The colex-first column set is the complement of the greedy row basis taken from the bottom.
  std::vector<std::size_t> order(k.d0.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  return columns_from_rows(k, order);
}

std::vector<std::vector<std::size_t>> valid_index_sets(const KoszulPair& k, std::size_t count) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t q = k.d0.rows();
  std::vector<std::size_t> order(q);
  for (std::size_t shift = 0; shift < q && out.size() < count; ++shift) {
    for (std::size_t i = 0; i < q; ++i) order[i] = q - 1 - (i + shift) % q;
    auto cols = columns_from_rows(k, order);
    if (std::find(out.begin(), out.end(), cols) == out.end()) out.push_back(std::move(cols));
  }
  return out;
}

Rational complex_determinant(const KoszulPair& k, std::span<const std::size_t> columns) {
  ComplexMinor cm = complex_minor(k, columns);
  if (cm.m0 == 0) throw Error(ErrorCode::InvalidArgument, "complementary D0 minor vanishes for this index set");
  if (cm.m1 == 0) throw Error(ErrorCode::ResultantVanishes, "the Koszul complex is not exact (resultant vanishes)");
  return cm.sign * cm.m1 / cm.m0;
}

Rational complex_determinant(const KoszulPair& k) {
  return complex_determinant(k, first_valid_index_set(k));
}

Rational resultant(const Triple& f, const Shape& shape) {
  KoszulPair k = koszul_matrices(f, 2, shape);
  try {
    return complex_determinant(k);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResultantVanishes) return 0;
    throw;
  }
}

Rational res_bihom(const Triple& f, int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::Degree, "bidegree must be at least (1,1)");
  return resultant(f, Shape::tensor(m, n));
}

Rational res_tri(const Triple& f, int n) {
  if (n < 1) throw Error(ErrorCode::Degree, "degree must be at least 1");
  return resultant(f, Shape::triangular(n));
}

// ---------------------------------------------------------------------------

ExactMatrix dixon_matrix(const Triple& f, int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::Degree, "bidegree must be at least (1,1)");
  check_triple(f, Shape::tensor(m, n));
  // Divided differences of the affine forms (u = v = 1), in Dixon variables (s, t, a, b).
  PolyMatrix cayley(3, 3, Vars::Dixon);
  for (std::size_t col = 0; col < 3; ++col) {
    for (const auto& [e, c] : f[col].terms()) {
      int ks = e[0], kt = e[2];
      // (f(s,t) - f(a,t)) / (s - a)
      for (int i = 0; i < ks; ++i) cayley(0, col).add_term(Exponents{i, kt, ks - 1 - i, 0}, c);
      // (f(a,t) - f(a,b)) / (t - b)
      for (int j = 0; j < kt; ++j) cayley(1, col).add_term(Exponents{0, j, ks, kt - 1 - j}, c);
      cayley(2, col).add_term(Exponents{0, 0, ks, kt}, c);
    }
  }
  const auto& g = cayley;
  SparsePoly delta = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
                     g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
                     g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));

  std::size_t size = static_cast<std::size_t>(2 * m * n);
  ExactMatrix out(size, size);
  std::vector<Label> rows, cols;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < 2 * n; ++j) rows.push_back(Label{Vars::Dixon, Exponents{i, j, 0, 0}, std::nullopt, 0});
  }
  for (int k = 0; k < 2 * m; ++k) {
    for (int l = 0; l < n; ++l) cols.push_back(Label{Vars::Dixon, Exponents{0, 0, k, l}, std::nullopt, 0});
  }
  for (const auto& [e, c] : delta.terms()) {
    if (e[0] >= m || e[1] >= 2 * n || e[2] >= 2 * m || e[3] >= n) {
      throw Error(ErrorCode::Internal, "Dixon polynomial term outside the expected support");
    }
    std::size_t r = static_cast<std::size_t>(e[0] * 2 * n + e[1]);
    std::size_t cc = static_cast<std::size_t>(e[2] * n + e[3]);
    out(r, cc) = c;
  }
  out.set_labels(std::move(rows), std::move(cols));
  return out;
}

Rational dixon_res(const Triple& f, int m, int n) { return det(dixon_matrix(f, m, n)); }

// ---------------------------------------------------------------------------

namespace {

struct MacaulayPair {
  ExactMatrix m;
  std::vector<std::size_t> non_reduced;
};

MacaulayPair macaulay_matrix(const Triple& f, int n, const std::array<std::size_t, 3>& roles) {
  MonomialBasis basis = ternary_basis(3 * n - 2);
  MacaulayPair out{ExactMatrix(basis.size(), basis.size()), {}};
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Exponents& alpha = basis[r];
    int divisible = 0;
    std::optional<std::size_t> owner;
    for (std::size_t k = 0; k < 3; ++k) {
      if (alpha[roles[k]] >= n) {
        ++divisible;
        if (!owner) owner = k;
      }
    }
    if (!owner) throw Error(ErrorCode::Internal, "critical-degree monomial without a dividing power");
    if (divisible > 1) out.non_reduced.push_back(r);
    Exponents shift = alpha;
    shift[roles[*owner]] = static_cast<std::uint16_t>(shift[roles[*owner]] - n);
    for (const auto& [e, c] : f[*owner].terms()) {
      auto col = basis.index_of(e + shift);
      if (!col) throw Error(ErrorCode::Internal, "Macaulay row leaves the critical degree");
      out.m(r, *col) = c;
    }
  }
  return out;
}

}  // namespace

Rational macaulay_res(const Triple& f, int n, MacaulayInfo* info) {
  if (n < 1) throw Error(ErrorCode::Degree, "degree must be at least 1");
  check_triple(f, Shape::triangular(n));
  std::array<std::size_t, 3> roles{0, 1, 2};
  int index = 0;
  do {
    MacaulayPair mp = macaulay_matrix(f, n, roles);
    Rational den = det(minor(mp.m, mp.non_reduced, mp.non_reduced));
    if (den != 0) {
      if (info) *info = {index, false, mp.m.rows()};
      return det(mp.m) / den;
    }
    ++index;
  } while (std::next_permutation(roles.begin(), roles.end()));

  // Every role order has a singular denominator: evaluate Res(f_i - lambda x_i^n)
  // as det(M - lambda) / det(M' - lambda) and interpolate at lambda = 0.
  MacaulayPair mp = macaulay_matrix(f, n, {0, 1, 2});
  std::size_t needed = static_cast<std::size_t>(3 * n * n + 1);
  std::vector<Rational> nodes, values;
  for (int lambda = 1; nodes.size() < needed; ++lambda) {
    if (lambda > 100 * static_cast<int>(needed)) {
      throw Error(ErrorCode::Internal, "no usable perturbation values for the Macaulay fallback");
    }
    ExactMatrix num = mp.m;
    for (std::size_t i = 0; i < num.rows(); ++i) num(i, i) -= lambda;
    ExactMatrix den_m = minor(num, mp.non_reduced, mp.non_reduced);
    Rational den = det(den_m);
    if (den == 0) continue;
    nodes.emplace_back(lambda);
    values.push_back(det(num) / den);
  }
  if (info) *info = {0, true, mp.m.rows()};
  return lagrange_at(nodes, values, Rational(0));
}

// ---------------------------------------------------------------------------

SparsePoly specialized_resultant_P(const ParamSurface& s, PStats* stats) {
  const Shape& shape = s.shape();
  int start = shape.patch == Patch::Tensor ? 2 * shape.m * shape.n : shape.n * shape.n;
  int cap = shape.patch == Patch::Tensor ? 6 * shape.m * shape.n : 3 * shape.n * shape.n;

  std::map<std::vector<Rational>, Rational> cache;
  auto value = [&](std::span<const Rational> x) -> Rational {
    std::vector<Rational> key(x.begin(), x.end());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Triple g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = s.x(i) - s.x(3) * x[i];
    Rational r = resultant(g, shape);
    cache.emplace(std::move(key), r);
    return r;
  };

  for (int bound = start;; bound = std::min(cap, 2 * bound)) {
    SparsePoly p = interpolate_total_degree(Vars::Affine, bound, value);
    bool ok = true;
    for (const auto& pt : held_out_points(3, bound, 2)) {
      if (p.eval(pt) != value(pt)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (stats) *stats = {bound, cache.size()};
      return p;
    }
    if (bound >= cap) {
      throw Error(ErrorCode::Interpolation,
                  "specialized resultant exceeds degree bound " + std::to_string(cap));
    }
  }
}

}  // namespace movsurf
