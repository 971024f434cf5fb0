#pragma once

#include "parafock/gram.hpp"
#include "parafock/words.hpp"

// Frozen hand-derived oracles. Everything here was worked out by hand from
// the defining relations, the vacuum conditions, and the adjointness rules
// before the corresponding library code ran, and is kept independent of the
// implementation paths it checks: tests compare the library against these
// values, never the other way round.
namespace parafock::fixtures {

// Recursion by hand at p = 2, sector (1,1):
//   <a,a> = <f+ (1,0,a), f+ (1,0,a)> = <(1,0,a), f- f+ (1,0,a)> = p * p = 4
//   <a,b> = via b = R+|0>: <a, R+|0>> = ... = p = 2
//   <b,b> = <R+|0>, R+|0>> = p = 2
inline RationalMatrix gram_p2_sector11() {
  RationalMatrix g(2, 2);
  g.at(0, 0) = 4;
  g.at(0, 1) = 2;
  g.at(1, 0) = 2;
  g.at(1, 1) = 2;
  return g;
}

// norm^2 of |0,n,alpha> = prod_{k=1..n} k * (p+1-k) = n! p! / (p-n)!,
// obtained by pushing f- through (f+)^n on the vacuum.
inline Rational zero_row_norm2(int p, int n) {
  Rational out = 1;
  for (int k = 1; k <= n; ++k) out *= Rational(k) * (p + 1 - k);
  return out;
}

// From [{f+,b-},b+] = 2 f+ applied to the vacuum, expanded with the
// vacuum conditions only:
//   p f+|0> + b- f+ b+|0> = 2 f+|0>   =>   b- |1,1,a> = (2-p) |0,1,a>.
inline Rational b_minus_on_11_alpha_coeff(int p) { return Rational(2 - p); }

// Basis enumeration written out by hand for two tiny windows.
inline std::vector<BasisIndex> basis_p1_max_m1() {
  return {{0, 0, Tag::alpha}, {0, 1, Tag::alpha}, {1, 0, Tag::alpha}, {1, 1, Tag::alpha}};
}

inline std::vector<BasisIndex> basis_p2_max_m1() {
  return {{0, 0, Tag::alpha}, {0, 1, Tag::alpha}, {0, 2, Tag::alpha},
          {1, 0, Tag::alpha}, {1, 1, Tag::alpha}, {1, 1, Tag::beta},
          {1, 2, Tag::alpha}};
}

// Independent dual route to any inner product, using only the action and
// the formal adjoint of the defining words:
//   <u, v> = <W_u 0, v> = <0, adj(W_u) v> = vacuum coefficient of adj(W_u) v.
// This never touches the Gram recursion, so agreement with GramTable is a
// genuine two-path check.
inline Rational inner_via_words(ParaOrder p, const BasisIndex& u, const BasisIndex& v) {
  const LadderAction action(p);
  const AlgebraElement dual = basis_defining_element(p, u).adjoint();
  const VectorExpr image = evaluate(action, dual, VectorExpr::unit(v));
  return image.coeff(vacuum_index);
}

}  // namespace parafock::fixtures
