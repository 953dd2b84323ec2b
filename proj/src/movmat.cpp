#include "movsurf/movmat.hpp"

#include <algorithm>
#include <set>

#include "movsurf/errors.hpp"
#include "movsurf/linalg.hpp"

namespace movsurf {

ExactMatrix linear_map_matrix(Vars vars, std::span<const SourceBlock> sources,
                              std::span<const TargetBlock> targets) {
  std::vector<std::size_t> offsets;
  std::size_t rows = 0;
  std::vector<Label> row_labels;
  for (const auto& t : targets) {
    offsets.push_back(rows);
    rows += t.basis.size();
    for (const auto& mono : t.basis) row_labels.push_back(Label{vars, mono, std::nullopt, t.block});
  }
  std::size_t cols = 0;
  for (const auto& s : sources) cols += s.monomials.size();

  ExactMatrix out(rows, cols);
  std::vector<Label> col_labels;
  std::size_t col = 0;
  for (const auto& src : sources) {
    if (src.images.size() != targets.size()) {
      throw Error(ErrorCode::Internal, "source block needs one image per target block");
    }
    for (const auto& mu : src.monomials) {
      for (std::size_t t = 0; t < targets.size(); ++t) {
        for (const auto& [exps, c] : src.images[t].terms()) {
          auto idx = targets[t].basis.index_of(mu + exps);
          if (!idx) throw Error(ErrorCode::Internal, "image monomial outside the target space");
          out(offsets[t] + *idx, col) += c;
        }
      }
      col_labels.push_back(Label{vars, mu, src.gamma, src.block});
      ++col;
    }
  }
  out.set_labels(std::move(row_labels), std::move(col_labels));
  return out;
}

GammaSet gamma_sets(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be at least 1");
  GammaSet g;
  g.d = d;
  g.all = homogeneous_basis(Vars::Implicit, d).monomials();
  for (const auto& gamma : g.all) {
    if (gamma[3] > 1) continue;
    g.gamma0.push_back(gamma);
    if (gamma[0] == 0) g.gamma1.push_back(gamma);
    if (gamma[3] == 0) g.gamma4.push_back(gamma);
  }
  return g;
}

// ---------------------------------------------------------------------------

IndexSetI::IndexSetI(int n, std::vector<std::pair<int, int>> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "index set needs n >= 1");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::InvalidArgument, "index set has duplicate pairs");
  }
  if (members_.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "index set must have exactly n = " +
                                                std::to_string(n) + " pairs");
  }
  for (const auto& [i, j] : members_) {
    if (i < 0 || j < 0 || i + j > n - 1) {
      throw Error(ErrorCode::InvalidArgument, "pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not a degree " +
                                                  std::to_string(n - 1) + " exponent pair");
    }
  }
}

bool IndexSetI::contains(const Exponents& monomial) const {
  return std::find(members_.begin(), members_.end(),
                   std::pair<int, int>{monomial[0], monomial[1]}) != members_.end();
}

std::vector<Exponents> IndexSetI::monomials() const {
  std::vector<Exponents> out;
  for (const auto& [i, j] : members_) out.push_back(Exponents{i, j, n_ - 1 - i - j});
  return out;
}

std::string IndexSetI::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(members_[k].first) + "," + std::to_string(members_[k].second) + ")";
  }
  return out + "}";
}

std::vector<IndexSetI> all_index_sets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= n - 1; ++i) {
    for (int j = 0; i + j <= n - 1; ++j) pairs.emplace_back(i, j);
  }
  std::vector<IndexSetI> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < pick.size(); ++k) pick[k] = k;
  if (pick.size() > pairs.size()) return out;
  while (true) {
    std::vector<std::pair<int, int>> members;
    for (std::size_t k : pick) members.push_back(pairs[k]);
    out.emplace_back(n, std::move(members));
    // Next combination in lexicographic order.
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] == pairs.size() - pick.size() + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_index_set(const ParamSurface& s, const std::optional<IndexSetI>& index_set) {
  if (s.patch() == Patch::Triangular) {
    if (!index_set) throw Error(ErrorCode::InvalidArgument, "triangular surfaces need an index set I");
    if (index_set->n() != s.n()) throw Error(ErrorCode::InvalidArgument, "index set built for another degree");
  } else if (index_set) {
    throw Error(ErrorCode::InvalidArgument, "index sets apply to triangular surfaces only");
  }
}

std::vector<SourceBlock> gamma_blocks(const ParamSurface& s, std::span<const Exponents> gammas,
                                      const MonomialBasis& source,
                                      const std::optional<IndexSetI>& index_set) {
  std::vector<SourceBlock> out;
  for (const auto& gamma : gammas) {
    SourceBlock b;
    for (const auto& mu : source) {
      if (index_set && gamma[3] == 1 && index_set->contains(mu)) continue;
      b.monomials.push_back(mu);
    }
    b.images = {s.power_product(gamma)};
    b.gamma = gamma;
    out.push_back(std::move(b));
  }
  return out;
}

ExactMatrix gamma_map(const ParamSurface& s, std::span<const Exponents> gammas,
                      const MonomialBasis& source, const MonomialBasis& target,
                      const std::optional<IndexSetI>& index_set) {
  auto sources = gamma_blocks(s, gammas, source, index_set);
  std::vector<TargetBlock> targets{{target, 0}};
  return linear_map_matrix(s.param_vars(), sources, targets);
}

}  // namespace

ExactMatrix build_MP(const ParamSurface& s) {
  return gamma_map(s, gamma_sets(1).all, s.shape().scaled_space(1), s.shape().scaled_space(2), {});
}

ExactMatrix build_MP_I(const ParamSurface& s, const IndexSetI& index_set) {
  require_index_set(s, index_set);
  return gamma_map(s, gamma_sets(1).all, s.shape().scaled_space(1), s.shape().scaled_space(2),
                   index_set);
}

ExactMatrix build_MQd(const ParamSurface& s, int d) {
  return gamma_map(s, gamma_sets(d).all, s.shape().scaled_space(1),
                   s.shape().scaled_space(d + 1), {});
}

ExactMatrix build_MSd(const ParamSurface& s, int d, const std::optional<IndexSetI>& index_set) {
  require_index_set(s, index_set);
  return gamma_map(s, gamma_sets(d).gamma0, s.shape().scaled_space(1),
                   s.shape().scaled_space(d + 1), index_set);
}

ExactMatrix build_MTd(const ParamSurface& s, int d, const std::optional<IndexSetI>& index_set) {
  require_index_set(s, index_set);
  GammaSet g = gamma_sets(d);
  auto sources = gamma_blocks(s, g.gamma1, s.shape().scaled_space(1), index_set);
  SourceBlock q;
  q.monomials = s.shape().scaled_space(d).monomials();
  q.images = {s.x(0)};
  q.gamma = Exponents{1, 0, 0, 0};
  q.block = 1;
  sources.push_back(std::move(q));
  std::vector<TargetBlock> targets{{s.shape().scaled_space(d + 1), 0}};
  return linear_map_matrix(s.param_vars(), sources, targets);
}

ExactMatrix moving_space_matrix(const ParamSurface& s, int d, Sigma sigma) {
  if (sigma.first < 0 || sigma.second < 0) throw Error(ErrorCode::InvalidArgument, "sigma must be non-negative");
  MonomialBasis source, target;
  if (s.patch() == Patch::Tensor) {
    source = bidegree_basis(sigma.first, sigma.second);
    target = bidegree_basis(sigma.first + d * s.m(), sigma.second + d * s.n());
  } else {
    source = ternary_basis(sigma.first);
    target = ternary_basis(sigma.first + d * s.n());
  }
  return gamma_map(s, gamma_sets(d).all, source, target, {});
}

std::string MovingSurface::to_string() const {
  if (coefficients.empty()) return "0";
  std::string out;
  for (const auto& [mono, form] : coefficients) {
    if (!out.empty()) out += "+";
    out += "(" + form.to_string() + ")";
    if (mono.degree() > 0) out += "*" + monomial_to_string(param_vars, mono);
  }
  return out;
}

SparsePoly MovingSurface::substitute(const ParamSurface& s) const {
  SparsePoly total(s.param_vars());
  for (const auto& [mono, form] : coefficients) {
    for (const auto& [gamma, c] : form.terms()) {
      total += (s.power_product(gamma) * c).shifted(mono);
    }
  }
  return total;
}

std::vector<MovingSurface> moving_space_basis(const ParamSurface& s, int d, Sigma sigma) {
  ExactMatrix a = moving_space_matrix(s, d, sigma);
  std::vector<MovingSurface> out;
  for (const auto& v : nullspace(a)) {
    MovingSurface ms;
    ms.param_vars = s.param_vars();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      const Label& label = a.col_labels()[c];
      auto [it, inserted] = ms.coefficients.try_emplace(label.monomial, SparsePoly(Vars::Implicit));
      it->second.add_term(*label.gamma, v[c]);
    }
    out.push_back(std::move(ms));
  }
  return out;
}

IndexSetI choose_index_set_I(const ParamSurface& s) {
  if (s.patch() != Patch::Triangular) throw Error(ErrorCode::InvalidArgument, "index sets apply to triangular surfaces only");
  ExactMatrix mp = build_MP(s);
  const Exponents x4{0, 0, 0, 1};
  for (const auto& candidate : all_index_sets(s.n())) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < mp.cols(); ++c) {
      const Label& l = mp.col_labels()[c];
      if (*l.gamma == x4 && candidate.contains(l.monomial)) continue;
      keep.push_back(c);
    }
    if (det(select_columns(mp, keep)) != 0) return candidate;
  }
  throw Error(ErrorCode::Singular,
              "no index set I gives a nonsingular MP_I: more than n moving planes of degree n-1 follow the surface");
}

}  // namespace movsurf
