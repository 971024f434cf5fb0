#pragma once

#include <stdexcept>
#include <vector>

#include "parafock/action.hpp"

namespace parafock {

/// A word in the free algebra over the four generators. Empty word = identity.
using Word = std::vector<Generator>;

std::string to_string(const Word& w);

/// Finite rational combination of words. This is the free *-algebra layer:
/// no relations are imposed here, the representation enters only through
/// evaluate(). Keeping the two layers separate is what lets relation checks
/// mean something.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement one();
  static AlgebraElement generator(Generator g);
  static AlgebraElement word(Word w, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  void add(Word w, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    a *= c;
    return a;
  }
  AlgebraElement operator-() const;

  /// Free product: concatenates words pairwise, left factor first.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  /// Formal adjoint: reverses each word and swaps +/- on every letter.
  /// Coefficients are rational, so conjugation is the identity on them.
  AlgebraElement adjoint() const;

  bool operator==(const AlgebraElement& other) const = default;

 private:
  std::map<Word, Rational> terms_;
};

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement anticommutator(const AlgebraElement& a, const AlgebraElement& b);

std::string to_string(const AlgebraElement& e);

/// Applies a word to a vector, rightmost letter first, via LadderAction.
VectorExpr evaluate(const LadderAction& action, const Word& w, const VectorExpr& v);
VectorExpr evaluate(const LadderAction& action, const AlgebraElement& e, const VectorExpr& v);
VectorExpr evaluate(ParaOrder p, const AlgebraElement& e, const VectorExpr& v);

/// Named derived elements. The number operators embed the central shift by
/// p, so the order is part of the element, not of the evaluation.
enum class Builtin { r_plus, r_minus, num_b, num_f, num_s };

AlgebraElement builtin_element(ParaOrder p, Builtin which);

/// The defining word of a canonical basis vector:
///   (m,n,alpha) -> (f+)^n (b+)^m
///   (m,n,beta)  -> (f+)^(n-1) (b+)^(m-1) R+   (expanded through R+).
/// evaluate() of this element on the vacuum reproduces the vector exactly.
AlgebraElement basis_defining_element(ParaOrder p, const BasisIndex& idx);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), pos(position) {}
  std::size_t pos;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor factor*                (juxtaposition = product)
///   factor := NUMBER | ATOM | '(' expr ')'
///           | '[' expr ',' expr ']'         (commutator)
///           | '{' expr ',' expr '}'         (anticommutator)
///   NUMBER := digits ['/' digits]
///   ATOM   := b+ | b- | f+ | f- | R+ | R- | N_b | N_f | N_s
/// Whitespace is insignificant. "1" is the identity.
AlgebraElement parse_element(ParaOrder p, std::string_view text);

/// Parses "|m,n,alpha>", "|m,n,beta>", or "|0>"; also accepts linear
/// combinations in the same syntax that to_string(VectorExpr) emits.
VectorExpr parse_ket(ParaOrder p, std::string_view text);

}  // namespace parafock
