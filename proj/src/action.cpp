#include "parafock/action.hpp"

#include <algorithm>

namespace parafock {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::b_plus: return "b+";
    case Generator::b_minus: return "b-";
    case Generator::f_plus: return "f+";
    case Generator::f_minus: return "f-";
  }
  throw std::logic_error("unknown generator");
}

std::optional<Generator> generator_from_string(std::string_view s) {
  if (s == "b+") return Generator::b_plus;
  if (s == "b-") return Generator::b_minus;
  if (s == "f+") return Generator::f_plus;
  if (s == "f-") return Generator::f_minus;
  return std::nullopt;
}

GradeDegree grade_of(Generator g) {
  return (g == Generator::b_plus || g == Generator::b_minus) ? GradeDegree{1, 0}
                                                             : GradeDegree{0, 1};
}

Generator adjoint_of(Generator g) {
  switch (g) {
    case Generator::b_plus: return Generator::b_minus;
    case Generator::b_minus: return Generator::b_plus;
    case Generator::f_plus: return Generator::f_minus;
    case Generator::f_minus: return Generator::f_plus;
  }
  throw std::logic_error("unknown generator");
}

namespace {

bool fault_matches(const Fault& fault, Generator g, const BasisIndex& idx) {
  if (fault.g != g || fault.input_tag != idx.tag) return false;
  return fault.m_parity < 0 || idx.m % 2 == fault.m_parity;
}

// Corrupts the matching raw term in place. Only preexisting terms are
// touched: a case whose target coefficient vanishes identically is left
// alone, so a fault never invents transitions out of nothing.
void apply_fault(const Fault& fault, std::vector<LadderAction::RawTerm>& terms) {
  auto it = std::find_if(terms.begin(), terms.end(),
                         [&](const auto& t) { return t.tag == fault.output_tag; });
  if (it == terms.end()) return;
  switch (fault.kind) {
    case FaultKind::flip_sign: it->coeff = -it->coeff; break;
    case FaultKind::offset_one: it->coeff += 1; break;
    case FaultKind::drop_term: terms.erase(it); break;
  }
}

}  // namespace

std::vector<LadderAction::RawTerm> LadderAction::raw(Generator g,
                                                     const BasisIndex& idx) const {
  if (!is_canonical(p_, idx))
    throw std::invalid_argument("action on non-canonical index " + to_string(idx));
  const int m = idx.m;
  const int n = idx.n;
  const int p = p_.value;
  const Rational sgn = n % 2 == 0 ? 1 : -1;

  std::vector<RawTerm> terms;
  auto emit = [&](int tm, int tn, Tag tt, Rational c) {
    if (c != 0) terms.push_back({tm, tn, tt, std::move(c)});
  };

  switch (g) {
    case Generator::b_minus:
      if (idx.tag == Tag::alpha) {
        if (m % 2 == 0) {
          emit(m - 1, n, Tag::alpha, sgn * m);
          emit(m - 1, n, Tag::beta, Rational(-2) * sgn * n * m);
        } else {
          emit(m - 1, n, Tag::alpha, -sgn * (2 * n - m - (p - 1)));
          emit(m - 1, n, Tag::beta, Rational(-2) * sgn * n * (m - 1));
        }
      } else {
        if (m % 2 == 0) {
          emit(m - 1, n, Tag::alpha, -sgn);
          emit(m - 1, n, Tag::beta, sgn * (2 * n - m - p));
        } else {
          emit(m - 1, n, Tag::alpha, -sgn);
          emit(m - 1, n, Tag::beta, -sgn * (m - 1));
        }
      }
      break;
    case Generator::f_minus:
      if (idx.tag == Tag::alpha) {
        emit(m, n - 1, Tag::alpha, Rational(n) * (p + 1 - n));
      } else {
        emit(m, n - 1, Tag::alpha, 1);
        emit(m, n - 1, Tag::beta, Rational(n - 1) * (p - n));
      }
      break;
    case Generator::b_plus:
      if (idx.tag == Tag::alpha) {
        emit(m + 1, n, Tag::alpha, sgn);
        emit(m + 1, n, Tag::beta, -sgn * 2 * n);
      } else {
        emit(m + 1, n, Tag::beta, -sgn);
      }
      break;
    case Generator::f_plus:
      if (n <= p - 1) emit(m, n + 1, idx.tag, 1);
      break;
  }

  if (fault_ && fault_matches(*fault_, g, idx)) apply_fault(*fault_, terms);
  return terms;
}

VectorExpr LadderAction::act(Generator g, const BasisIndex& idx) const {
  VectorExpr out;
  for (const RawTerm& t : raw(g, idx)) out += reduce(p_, t.m, t.n, t.tag, t.coeff);
  return out;
}

VectorExpr LadderAction::act(Generator g, const VectorExpr& v) const {
  VectorExpr out;
  for (const auto& [idx, c] : v.terms()) {
    VectorExpr image = act(g, idx);
    image *= c;
    out += image;
  }
  return out;
}

VectorExpr act_generator(ParaOrder p, Generator g, const BasisIndex& idx) {
  return LadderAction(p).act(g, idx);
}

VectorExpr act_expr(ParaOrder p, Generator g, const VectorExpr& v) {
  return LadderAction(p).act(g, v);
}

const std::vector<Fault>& fault_catalog() {
  static const std::vector<Fault> catalog = {
      {"b-.alpha.even.alpha.sign",
       "flip the sign of the alpha output of b- on |m,n,alpha>, m even",
       Generator::b_minus, Tag::alpha, 0, Tag::alpha, FaultKind::flip_sign},
      {"b-.alpha.odd.alpha.offset",
       "shift the alpha coefficient of b- on |m,n,alpha>, m odd, by one",
       Generator::b_minus, Tag::alpha, 1, Tag::alpha, FaultKind::offset_one},
      {"b-.alpha.even.beta.drop",
       "drop the beta output of b- on |m,n,alpha>, m even",
       Generator::b_minus, Tag::alpha, 0, Tag::beta, FaultKind::drop_term},
      {"b-.beta.even.beta.sign",
       "flip the sign of the beta output of b- on |m,n,beta>, m even",
       Generator::b_minus, Tag::beta, 0, Tag::beta, FaultKind::flip_sign},
      {"b-.beta.odd.alpha.drop",
       "drop the alpha output of b- on |m,n,beta>, m odd",
       Generator::b_minus, Tag::beta, 1, Tag::alpha, FaultKind::drop_term},
      {"f-.alpha.alpha.offset",
       "shift the coefficient of f- on |m,n,alpha> by one",
       Generator::f_minus, Tag::alpha, -1, Tag::alpha, FaultKind::offset_one},
      {"f-.beta.alpha.sign",
       "flip the sign of the alpha output of f- on |m,n,beta>",
       Generator::f_minus, Tag::beta, -1, Tag::alpha, FaultKind::flip_sign},
      {"b+.alpha.beta.offset",
       "shift the beta coefficient of b+ on |m,n,alpha> by one",
       Generator::b_plus, Tag::alpha, -1, Tag::beta, FaultKind::offset_one},
      {"b+.beta.beta.sign",
       "flip the sign of b+ on |m,n,beta>",
       Generator::b_plus, Tag::beta, -1, Tag::beta, FaultKind::flip_sign},
      {"f+.alpha.alpha.sign",
       "flip the sign of f+ on |m,n,alpha>",
       Generator::f_plus, Tag::alpha, -1, Tag::alpha, FaultKind::flip_sign},
      {"f+.beta.beta.sign",
       "flip the sign of f+ on |m,n,beta>",
       Generator::f_plus, Tag::beta, -1, Tag::beta, FaultKind::flip_sign},
  };
  return catalog;
}

std::optional<Fault> fault_by_name(std::string_view name) {
  for (const Fault& f : fault_catalog())
    if (f.name == name) return f;
  return std::nullopt;
}

SparseOperator matrix_of(const LadderAction& action, Truncation t, Generator g) {
  SparseOperator op{action.order(), t, g, {}, g != Generator::b_plus};
  for (const BasisIndex& col : canonical_basis(action.order(), t)) {
    const VectorExpr image = action.act(g, col);
    for (const auto& [row, c] : image.terms()) {
      if (row.m > t.max_m) continue;  // only b+ can leave the window
      op.entries[{row, col}] = c;
    }
  }
  return op;
}

SparseOperator matrix_of(ParaOrder p, Truncation t, Generator g) {
  return matrix_of(LadderAction(p), t, g);
}

}  // namespace parafock
