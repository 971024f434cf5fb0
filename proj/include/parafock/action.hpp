#pragma once

#include <array>
#include <optional>
#include <utility>

#include "parafock/basis.hpp"

namespace parafock {

enum class Generator { b_plus, b_minus, f_plus, f_minus };

inline constexpr std::array<Generator, 4> all_generators{
    Generator::b_plus, Generator::b_minus, Generator::f_plus, Generator::f_minus};

std::string to_string(Generator g);  // "b+", "b-", "f+", "f-"
std::optional<Generator> generator_from_string(std::string_view s);

/// deg b± = (1,0), deg f± = (0,1).
GradeDegree grade_of(Generator g);

Generator adjoint_of(Generator g);  // b+ <-> b-, f+ <-> f-

enum class FaultKind { flip_sign, offset_one, drop_term };

/// A named single-coefficient corruption of one action case. Used only to
/// demonstrate that the verification suites have detection power.
struct Fault {
  std::string name;
  std::string description;
  Generator g;
  Tag input_tag;
  int m_parity;  // 0 even, 1 odd, -1 either (only the b- cases split on parity)
  Tag output_tag;
  FaultKind kind;
};

const std::vector<Fault>& fault_catalog();
std::optional<Fault> fault_by_name(std::string_view name);

/// Generator-action evaluator for a fixed order p. Immutable after
/// construction; all member calls are pure, so instances are freely shared
/// across threads. The action is exact at every m: truncation only ever
/// happens in matrix export.
class LadderAction {
 public:
  explicit LadderAction(ParaOrder p) : p_(p) {}
  LadderAction(ParaOrder p, Fault fault) : p_(p), fault_(std::move(fault)) {}

  ParaOrder order() const { return p_; }
  const std::optional<Fault>& fault() const { return fault_; }

  /// One raw term of an action case, before canonical reduction.
  struct RawTerm {
    int m;
    int n;
    Tag tag;
    Rational coeff;
  };

  /// The literal case split of the action table on a canonical index,
  /// without reduction. Zero coefficients are omitted.
  std::vector<RawTerm> raw(Generator g, const BasisIndex& idx) const;

  /// Raw case followed by reduce on every produced term.
  VectorExpr act(Generator g, const BasisIndex& idx) const;

  /// Linear extension of act to vectors.
  VectorExpr act(Generator g, const VectorExpr& v) const;

 private:
  ParaOrder p_;
  std::optional<Fault> fault_;
};

VectorExpr act_generator(ParaOrder p, Generator g, const BasisIndex& idx);
VectorExpr act_expr(ParaOrder p, Generator g, const VectorExpr& v);

/// Truncated matrix of one generator over canonical_basis(p,t); a lossy
/// export of the dynamic action. boundary_exact is false exactly when the
/// operator can raise m out of the window (b+).
struct SparseOperator {
  ParaOrder p;
  Truncation t;
  Generator g;
  std::map<std::pair<BasisIndex, BasisIndex>, Rational> entries;  // (row, col)
  bool boundary_exact = true;
};

SparseOperator matrix_of(ParaOrder p, Truncation t, Generator g);
SparseOperator matrix_of(const LadderAction& action, Truncation t, Generator g);

}  // namespace parafock
