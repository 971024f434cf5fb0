#pragma once

#include <mutex>

#include "parafock/action.hpp"

namespace parafock {

/// Dense rational matrix, row-major. Small: sector Grams are at most 2x2,
/// full-window Grams a few hundred square.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  Rational& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const Rational& at(int r, int c) const { return data[std::size_t(r) * cols + c]; }

  bool operator==(const RationalMatrix& other) const = default;
};

std::string to_string(const RationalMatrix& m);

/// Exact inner products on the carrier space, computed by recursion on
/// (m,n): every vector at level (m,n) is a combination of raising-operator
/// images of vectors one level down, and <Xw,v> = <w, adj(X) v> pushes the
/// pairing down until it grounds at <vac,vac> = 1. Distinct sectors are
/// orthogonal. Sector results are memoised; instances are thread-safe.
class GramTable {
 public:
  explicit GramTable(ParaOrder p) : p_(p), act_(p) {}
  GramTable(ParaOrder p, const LadderAction& action) : p_(p), act_(action) {}

  ParaOrder order() const { return p_; }

  /// Gram matrix of the canonical vectors of sector (m,n), in tag order
  /// (alpha, then beta when present). Dimension 0 sectors give a 0x0 matrix.
  RationalMatrix sector(int m, int n) const;

  Rational inner(const BasisIndex& u, const BasisIndex& v) const;
  Rational inner(const VectorExpr& u, const VectorExpr& v) const;
  Rational norm2(const BasisIndex& u) const { return inner(u, u); }

  /// Coefficients c such that the canonical vectors of sector (m,n) equal
  /// the raising images sum_j c_j q_j, where {q_j} are b+ images of the
  /// canonical vectors of (m-1,n) followed by f+ images of those of
  /// (m,n-1). Column k expands the k-th canonical vector. Used internally
  /// by the recursion and exposed for inspection.
  RationalMatrix preimage_coefficients(int m, int n) const;

 private:
  struct SectorData {
    RationalMatrix gram;
    RationalMatrix preimage;
  };

  const SectorData& sector_data(int m, int n) const;

  ParaOrder p_;
  LadderAction act_;
  mutable std::map<std::pair<int, int>, SectorData> memo_;
  mutable std::recursive_mutex mutex_;
};

/// Shared per-order table with the unfaulted action, for callers that just
/// want numbers.
const GramTable& clean_gram_table(ParaOrder p);

Rational sector_gram_entry(ParaOrder p, int m, int n, Tag row, Tag col);
RationalMatrix sector_gram(ParaOrder p, int m, int n);

/// Gram matrix over the whole canonical basis window, basis order matching
/// canonical_basis(p, t). Block diagonal by sector.
RationalMatrix window_gram(ParaOrder p, Truncation t);

/// Sum of dimensions over the window: the spectral-side checksum of the
/// basis enumeration.
long long window_dimension(ParaOrder p, Truncation t);

/// One orthonormal basis vector of a sector, expressed in canonical
/// coordinates with double coefficients:
///   |m,n,+> =  c+ * alpha
///   |m,n,-> = -c- * (alpha - p*beta)
/// On 1-dim sectors only the "+" vector exists.
struct OrthonormalVector {
  BasisIndex sector;  // tag field: alpha = "+", beta = "-"
  std::map<BasisIndex, double> coords;
};

std::vector<OrthonormalVector> orthonormal_sector_basis(ParaOrder p, int m, int n);

/// Max |<ei,ej> - delta_ij| over the orthonormal vectors of a sector,
/// evaluated with the exact Gram and double coefficients.
double orthonormality_residual(ParaOrder p, int m, int n);

/// Max abs entry of (B^T B G - I), where the rows of B are the orthonormal
/// vectors in canonical coordinates: B^T B G is the matrix of the rank-one
/// sum  sum_s |m,n,s><m,n,s|  acting on the sector, so this is the
/// resolution-of-identity residual.
double completeness_residual(ParaOrder p, int m, int n);

}  // namespace parafock
