#include "parafock/basis.hpp"

namespace parafock {

std::string to_string(Tag t) { return t == Tag::alpha ? "alpha" : "beta"; }

std::string to_string(const BasisIndex& idx) {
  return "(" + std::to_string(idx.m) + "," + std::to_string(idx.n) + "," +
         to_string(idx.tag) + ")";
}

std::string ket_string(const BasisIndex& idx) {
  return "|" + std::to_string(idx.m) + "," + std::to_string(idx.n) + "," +
         to_string(idx.tag) + ">";
}

std::string to_string(const GradeDegree& g) {
  return "(" + std::to_string(g.g1) + "," + std::to_string(g.g2) + ")";
}

std::string to_string(const VectorExpr& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : v.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) out += to_string(mag) + "*";
    out += ket_string(idx);
  }
  return out;
}

int subspace_dim(ParaOrder p, int m, int n) {
  if (m < 0 || n < 0 || n > p.value) return 0;
  if (m >= 1 && n >= 1 && n <= p.value - 1) return 2;
  return 1;
}

bool is_canonical(ParaOrder p, const BasisIndex& idx) {
  const int dim = subspace_dim(p, idx.m, idx.n);
  if (dim == 0) return false;
  return idx.tag == Tag::alpha || dim == 2;
}

std::vector<BasisIndex> canonical_basis(ParaOrder p, Truncation t) {
  std::vector<BasisIndex> basis;
  for (int m = 0; m <= t.max_m; ++m) {
    for (int n = 0; n <= p.value; ++n) {
      basis.push_back({m, n, Tag::alpha});
      if (subspace_dim(p, m, n) == 2) basis.push_back({m, n, Tag::beta});
    }
  }
  return basis;
}

GradeDegree grade_of(const BasisIndex& idx) { return {idx.m % 2, idx.n % 2}; }

VectorExpr reduce(ParaOrder p, int m, int n, Tag tag, const Rational& coeff) {
  if (coeff == 0) return {};
  if (m < 0 || n < 0)
    throw std::logic_error("reduce reached a negative label with nonzero coefficient");
  if (n > p.value) return {};
  if (tag == Tag::beta) {
    if (m == 0 || n == 0) return {};
    if (n == p.value) return VectorExpr::unit({m, p.value, Tag::alpha}, coeff / p.value);
  }
  return VectorExpr::unit({m, n, tag}, coeff);
}

}  // namespace parafock
