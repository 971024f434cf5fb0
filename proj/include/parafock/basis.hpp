#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parafock/rational.hpp"

namespace parafock {

/// Parastatistics order p >= 1. Fixes one module of the family.
struct ParaOrder {
  int value;
  explicit ParaOrder(int p) : value(p) {
    if (p < 1) throw std::invalid_argument("parastatistics order must be >= 1");
  }
};

/// Window in the parabosonic direction (m <= max_m). The parafermionic
/// direction is never truncated: 0 <= n <= p is finite by itself.
struct Truncation {
  int max_m;
  explicit Truncation(int m) : max_m(m) {
    if (m < 0) throw std::invalid_argument("max_m must be >= 0");
  }
};

enum class Tag { alpha, beta };

/// Label of a carrier-space basis vector |m,n,tag>. Ordered by m, then n,
/// then alpha before beta; this order is the global basis order.
struct BasisIndex {
  int m = 0;
  int n = 0;
  Tag tag = Tag::alpha;
  auto operator<=>(const BasisIndex&) const = default;
};

inline constexpr BasisIndex vacuum_index{0, 0, Tag::alpha};

std::string to_string(Tag t);
std::string to_string(const BasisIndex& idx);  // "(m,n,alpha)"
std::string ket_string(const BasisIndex& idx); // "|m,n,alpha>"

/// Z2 x Z2 degree; addition is componentwise mod 2.
struct GradeDegree {
  int g1 = 0;
  int g2 = 0;
  friend GradeDegree operator+(GradeDegree a, GradeDegree b) {
    return {(a.g1 + b.g1) % 2, (a.g2 + b.g2) % 2};
  }
  bool operator==(const GradeDegree&) const = default;
};

std::string to_string(const GradeDegree& g);

/// Finite linear combination of canonical basis vectors with exact rational
/// coefficients. No zero coefficients are stored; empty = zero vector.
class VectorExpr {
 public:
  using Terms = std::map<BasisIndex, Rational>;

  VectorExpr() = default;

  static VectorExpr unit(const BasisIndex& idx, const Rational& c = 1) {
    VectorExpr v;
    v.add(idx, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const BasisIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const BasisIndex& idx, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  VectorExpr& operator+=(const VectorExpr& o) {
    for (const auto& [idx, c] : o.terms_) add(idx, c);
    return *this;
  }
  VectorExpr& operator-=(const VectorExpr& o) {
    for (const auto& [idx, c] : o.terms_) add(idx, -c);
    return *this;
  }
  VectorExpr& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
  }

  friend VectorExpr operator+(VectorExpr a, const VectorExpr& b) { return a += b; }
  friend VectorExpr operator-(VectorExpr a, const VectorExpr& b) { return a -= b; }
  friend VectorExpr operator*(const Rational& s, VectorExpr v) { return v *= s; }

  bool operator==(const VectorExpr&) const = default;

 private:
  Terms terms_;
};

std::string to_string(const VectorExpr& v);

/// Dimension of the sector V_{m,n}: 2 in the interior (m >= 1, 1 <= n <= p-1),
/// 1 on the m = 0, n = 0 and n = p borders, 0 above the n = p edge.
int subspace_dim(ParaOrder p, int m, int n);

bool is_canonical(ParaOrder p, const BasisIndex& idx);

/// All canonical indices with m <= max_m, in the global basis order.
std::vector<BasisIndex> canonical_basis(ParaOrder p, Truncation t);

/// deg |m,n,.> = (m mod 2, n mod 2); independent of the tag.
GradeDegree grade_of(const BasisIndex& idx);

/// Canonicalizes one raw term: zero above n = p and for the vanishing beta
/// labels (m = 0 or n = 0); |m,p,beta> rewrites to (1/p)|m,p,alpha>.
VectorExpr reduce(ParaOrder p, int m, int n, Tag tag, const Rational& coeff);

}  // namespace parafock
