#include "movsurf/interpolate.hpp"

#include <map>
#include <numeric>

#include "movsurf/errors.hpp"

namespace movsurf {

namespace {

using Table = std::map<std::vector<int>, Rational>;
using TermMap = std::map<Exponents, Rational>;

void collect_points(std::size_t nvars, int remaining, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur.push_back(k);
    collect_points(nvars, remaining - k, cur, out);
    cur.pop_back();
  }
}

// Coefficients of prod_{l<k} (x - node_l), lowest degree first.
std::vector<Rational> newton_basis_coefficients(int k) {
  std::vector<Rational> coeffs{1};
  for (int l = 0; l < k; ++l) {
    std::vector<Rational> next(coeffs.size() + 1);
    Rational node = lattice_node(l);
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      next[p + 1] += coeffs[p];
      next[p] -= node * coeffs[p];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

// Interpolates values given on the principal lattice in `nleft` variables,
// which occupy positions var_offset.. of the exponent vector.
TermMap interpolate_table(std::size_t nleft, int degree, const Table& table, std::size_t var_offset) {
  TermMap result;
  if (nleft == 0) {
    Rational c = table.at({});
    if (c != 0) result.emplace(Exponents{}, c);
    return result;
  }
  std::vector<Table> q_tables(static_cast<std::size_t>(degree) + 1);
  for (const auto& y : lattice_points(nleft - 1, degree)) {
    int top = degree - std::accumulate(y.begin(), y.end(), 0);
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
    std::vector<int> key(1 + y.size());
    std::copy(y.begin(), y.end(), key.begin() + 1);
    for (int l = 0; l <= top; ++l) {
      key[0] = l;
      c[l] = table.at(key);
    }
    for (int k = 1; k <= top; ++k) {
      for (int l = top; l >= k; --l) {
        c[l] = (c[l] - c[l - 1]) / (lattice_node(l) - lattice_node(l - k));
      }
    }
    for (int k = 0; k <= top; ++k) q_tables[k].emplace(y, c[k]);
  }
  for (int k = 0; k <= degree; ++k) {
    TermMap q = interpolate_table(nleft - 1, degree - k, q_tables[k], var_offset + 1);
    if (q.empty()) continue;
    std::vector<Rational> nk = newton_basis_coefficients(k);
    for (const auto& [exps, c] : q) {
      for (std::size_t p = 0; p < nk.size(); ++p) {
        if (nk[p] == 0) continue;
        Exponents e = exps;
        e[var_offset] = static_cast<std::uint16_t>(p);
        Rational& slot = result[e];
        slot += c * nk[p];
      }
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    it = it->second == 0 ? result.erase(it) : std::next(it);
  }
  return result;
}

}  // namespace

std::vector<std::vector<int>> lattice_points(std::size_t nvars, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> cur;
  collect_points(nvars, degree, cur, out);
  return out;
}

SparsePoly interpolate_total_degree(Vars vars, int degree, const PointFunction& f) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative interpolation degree");
  std::size_t nv = var_count(vars);
  Table table;
  std::vector<Rational> point(nv);
  for (const auto& idx : lattice_points(nv, degree)) {
    for (std::size_t i = 0; i < nv; ++i) point[i] = lattice_node(idx[i]);
    table.emplace(idx, f(point));
  }
  SparsePoly out(vars);
  for (const auto& [exps, c] : interpolate_table(nv, degree, table, 0)) out.add_term(exps, c);
  return out;
}

std::vector<std::vector<Rational>> held_out_points(std::size_t nvars, int degree, int count) {
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> pt(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
      // Half-integers never coincide with lattice nodes.
      int num = 2 * (degree + 2 + 3 * static_cast<int>(j) + 5 * i) + 1;
      pt[j] = make_rational(num, 2);
      if ((i + static_cast<int>(j)) % 2 == 1) pt[j] = -pt[j];
    }
    out.push_back(std::move(pt));
  }
  return out;
}

Rational lagrange_at(std::span<const Rational> nodes, std::span<const Rational> values,
                     const Rational& at) {
  if (nodes.size() != values.size()) throw Error(ErrorCode::InvalidArgument, "node/value count mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rational term = values[i];
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i) term *= (at - nodes[j]) / (nodes[i] - nodes[j]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace movsurf
