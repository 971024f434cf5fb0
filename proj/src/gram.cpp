#include "parafock/gram.hpp"

#include <cmath>
#include <memory>

namespace parafock {

std::string to_string(const RationalMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows; ++r) {
    if (r) out += ", ";
    out += "[";
    for (int c = 0; c < m.cols; ++c) {
      if (c) out += ", ";
      out += to_string(m.at(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

namespace {

std::vector<BasisIndex> sector_vectors(ParaOrder p, int m, int n) {
  std::vector<BasisIndex> out;
  const int d = subspace_dim(p, m, n);
  if (d >= 1) out.push_back({m, n, Tag::alpha});
  if (d == 2) out.push_back({m, n, Tag::beta});
  return out;
}

/// Solves A X = I_d for X (k x d) by Gauss-Jordan elimination over the
/// rationals; A is d x k with rank d (guaranteed here because the raising
/// images span every sector). Free columns get coefficient zero.
RationalMatrix solve_preimage(RationalMatrix a) {
  const int d = a.rows;
  const int k = a.cols;
  RationalMatrix aug(d, k + d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < k; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, k + r) = 1;
  }
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < k && row < d; ++col) {
    int pivot = -1;
    for (int r = row; r < d; ++r) {
      if (aug.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < k + d; ++c) std::swap(aug.at(pivot, c), aug.at(row, c));
    const Rational lead = aug.at(row, col);
    for (int c = col; c < k + d; ++c) aug.at(row, c) /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == row || aug.at(r, col) == 0) continue;
      const Rational factor = aug.at(r, col);
      for (int c = col; c < k + d; ++c) aug.at(r, c) -= factor * aug.at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (row < d)
    throw std::logic_error("raising images fail to span a sector; the action table is inconsistent");
  RationalMatrix x(k, d);
  for (int r = 0; r < d; ++r)
    for (int i = 0; i < d; ++i) x.at(pivot_cols[std::size_t(r)], i) = aug.at(r, k + i);
  return x;
}

}  // namespace

const GramTable::SectorData& GramTable::sector_data(int m, int n) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;

  SectorData data;
  const int d = subspace_dim(p_, m, n);
  const std::vector<BasisIndex> targets = sector_vectors(p_, m, n);

  if (d == 0) {
    // nothing to do: both matrices stay 0x0
  } else if (m == 0 && n == 0) {
    data.gram = RationalMatrix(1, 1);
    data.gram.at(0, 0) = 1;  // <vac,vac> = 1
    data.preimage = RationalMatrix(0, 1);
  } else {
    // Raising routes into this sector: b+ images of the sector below,
    // then f+ images of the sector to the left.
    struct Route {
      Generator raise;
      BasisIndex u;
    };
    std::vector<Route> routes;
    if (m >= 1)
      for (const BasisIndex& u : sector_vectors(p_, m - 1, n))
        routes.push_back({Generator::b_plus, u});
    if (n >= 1)
      for (const BasisIndex& u : sector_vectors(p_, m, n - 1))
        routes.push_back({Generator::f_plus, u});
    const int k = int(routes.size());

    std::vector<VectorExpr> images(routes.size());
    RationalMatrix coords(d, k);
    for (int j = 0; j < k; ++j) {
      images[std::size_t(j)] = act_.act(routes[std::size_t(j)].raise, routes[std::size_t(j)].u);
      for (const auto& [idx, c] : images[std::size_t(j)].terms()) {
        const int i = idx.tag == Tag::alpha ? 0 : 1;
        coords.at(i, j) = c;
      }
    }
    data.preimage = solve_preimage(coords);  // k x d

    // <q_j, e_i> = <u_j, adj(raise_j) e_i>, a pairing one level down.
    RationalMatrix q_dot_e(k, d);
    for (int j = 0; j < k; ++j) {
      const Generator lower = adjoint_of(routes[std::size_t(j)].raise);
      for (int i = 0; i < d; ++i) {
        const VectorExpr w = act_.act(lower, VectorExpr::unit(targets[std::size_t(i)]));
        Rational s = 0;
        for (const auto& [idx, c] : w.terms()) s += c * inner(routes[std::size_t(j)].u, idx);
        q_dot_e.at(j, i) = s;
      }
    }
    data.gram = RationalMatrix(d, d);
    for (int i = 0; i < d; ++i)
      for (int i2 = 0; i2 < d; ++i2) {
        Rational s = 0;
        for (int j = 0; j < k; ++j) s += data.preimage.at(j, i) * q_dot_e.at(j, i2);
        data.gram.at(i, i2) = s;
      }
  }

  return memo_.emplace(std::make_pair(m, n), std::move(data)).first->second;
}

RationalMatrix GramTable::sector(int m, int n) const { return sector_data(m, n).gram; }

RationalMatrix GramTable::preimage_coefficients(int m, int n) const {
  return sector_data(m, n).preimage;
}

Rational GramTable::inner(const BasisIndex& u, const BasisIndex& v) const {
  if (!is_canonical(p_, u) || !is_canonical(p_, v))
    throw std::invalid_argument("inner product of non-canonical indices");
  if (u.m != v.m || u.n != v.n) return 0;
  const RationalMatrix& g = sector_data(u.m, u.n).gram;
  const int i = u.tag == Tag::alpha ? 0 : 1;
  const int j = v.tag == Tag::alpha ? 0 : 1;
  return g.at(i, j);
}

Rational GramTable::inner(const VectorExpr& u, const VectorExpr& v) const {
  Rational s = 0;
  for (const auto& [iu, cu] : u.terms())
    for (const auto& [iv, cv] : v.terms()) {
      if (iu.m != iv.m || iu.n != iv.n) continue;
      s += cu * cv * inner(iu, iv);
    }
  return s;
}

const GramTable& clean_gram_table(ParaOrder p) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<GramTable>> tables;
  std::lock_guard<std::mutex> lock(guard);
  auto& slot = tables[p.value];
  if (!slot) slot = std::make_unique<GramTable>(p);
  return *slot;
}

Rational sector_gram_entry(ParaOrder p, int m, int n, Tag row, Tag col) {
  return clean_gram_table(p).inner({m, n, row}, {m, n, col});
}

RationalMatrix sector_gram(ParaOrder p, int m, int n) {
  return clean_gram_table(p).sector(m, n);
}

RationalMatrix window_gram(ParaOrder p, Truncation t) {
  const std::vector<BasisIndex> basis = canonical_basis(p, t);
  const GramTable& table = clean_gram_table(p);
  const int dim = int(basis.size());
  RationalMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const BasisIndex &u = basis[std::size_t(i)], &v = basis[std::size_t(j)];
      if (u.m != v.m || u.n != v.n) continue;  // cross-sector entries stay 0
      g.at(i, j) = table.inner(u, v);
    }
  return g;
}

long long window_dimension(ParaOrder p, Truncation t) {
  long long total = 0;
  for (int m = 0; m <= t.max_m; ++m)
    for (int n = 0; n <= p.value; ++n) total += subspace_dim(p, m, n);
  return total;
}

std::vector<OrthonormalVector> orthonormal_sector_basis(ParaOrder p, int m, int n) {
  const GramTable& table = clean_gram_table(p);
  const int d = subspace_dim(p, m, n);
  std::vector<OrthonormalVector> out;
  if (d == 0) return out;

  const BasisIndex a{m, n, Tag::alpha};
  const double c_plus = 1.0 / std::sqrt(to_double(table.inner(a, a)));
  out.push_back({{m, n, Tag::alpha}, {{a, c_plus}}});

  if (d == 2) {
    const BasisIndex b{m, n, Tag::beta};
    const Rational pv(p.value);
    // w = alpha - p*beta; <w,w> expands exactly before any rounding.
    const Rational ww = table.inner(a, a) - 2 * pv * table.inner(a, b) +
                        pv * pv * table.inner(b, b);
    const double c_minus = 1.0 / std::sqrt(to_double(ww));
    out.push_back({{m, n, Tag::beta}, {{a, -c_minus}, {b, c_minus * p.value}}});
  }
  return out;
}

double orthonormality_residual(ParaOrder p, int m, int n) {
  const GramTable& table = clean_gram_table(p);
  const auto basis = orthonormal_sector_basis(p, m, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      double dot = 0.0;
      for (const auto& [iu, cu] : basis[i].coords)
        for (const auto& [iv, cv] : basis[j].coords)
          dot += cu * cv * to_double(table.inner(iu, iv));
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - target));
    }
  return worst;
}

double completeness_residual(ParaOrder p, int m, int n) {
  const GramTable& table = clean_gram_table(p);
  const auto basis = orthonormal_sector_basis(p, m, n);
  const auto targets = sector_vectors(p, m, n);
  const int d = int(targets.size());
  if (d == 0) return 0.0;

  // B: rows = orthonormal vectors in canonical coordinates.
  std::vector<std::vector<double>> b(basis.size(), std::vector<double>(std::size_t(d), 0.0));
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (int i = 0; i < d; ++i) {
      auto it = basis[s].coords.find(targets[std::size_t(i)]);
      if (it != basis[s].coords.end()) b[s][std::size_t(i)] = it->second;
    }

  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // (B^T B G)_{ij}
      double entry = 0.0;
      for (std::size_t s = 0; s < basis.size(); ++s)
        for (int k = 0; k < d; ++k)
          entry += b[s][std::size_t(i)] * b[s][std::size_t(k)] *
                   to_double(table.inner(targets[std::size_t(k)], targets[std::size_t(j)]));
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(entry - target));
    }
  return worst;
}

}  // namespace parafock
