#include "parafock/words.hpp"

#include <cctype>

namespace parafock {

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

AlgebraElement AlgebraElement::one() { return word({}); }

AlgebraElement AlgebraElement::generator(Generator g) { return word({g}); }

AlgebraElement AlgebraElement::word(Word w, Rational coeff) {
  AlgebraElement e;
  e.add(std::move(w), coeff);
  return e;
}

Rational AlgebraElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(Word w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e = *this;
  e *= Rational(-1);
  return e;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb);
    }
  }
  return out;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out;
  for (const auto& [w, c] : terms_) {
    Word rev;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back(adjoint_of(*it));
    out.add(std::move(rev), c);
  }
  return out;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b - b * a;
}

AlgebraElement anticommutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b + b * a;
}

std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(w);
    }
  }
  return out;
}

VectorExpr evaluate(const LadderAction& action, const Word& w, const VectorExpr& v) {
  VectorExpr cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (cur.is_zero()) break;
    cur = action.act(*it, cur);
  }
  return cur;
}

VectorExpr evaluate(const LadderAction& action, const AlgebraElement& e,
                    const VectorExpr& v) {
  VectorExpr out;
  for (const auto& [w, c] : e.terms()) {
    VectorExpr r = evaluate(action, w, v);
    r *= c;
    out += r;
  }
  return out;
}

VectorExpr evaluate(ParaOrder p, const AlgebraElement& e, const VectorExpr& v) {
  return evaluate(LadderAction(p), e, v);
}

AlgebraElement builtin_element(ParaOrder p, Builtin which) {
  const AlgebraElement bp = AlgebraElement::generator(Generator::b_plus);
  const AlgebraElement bm = AlgebraElement::generator(Generator::b_minus);
  const AlgebraElement fp = AlgebraElement::generator(Generator::f_plus);
  const AlgebraElement fm = AlgebraElement::generator(Generator::f_minus);
  const AlgebraElement one = AlgebraElement::one();
  const Rational half = Rational(1) / 2;
  const Rational half_p = Rational(p.value) / 2;
  switch (which) {
    case Builtin::r_plus: return half * anticommutator(bp, fp);
    case Builtin::r_minus: return half * anticommutator(bm, fm);
    case Builtin::num_b: return half * anticommutator(bp, bm) - half_p * one;
    case Builtin::num_f: return half * commutator(fp, fm) + half_p * one;
    case Builtin::num_s: {
      const AlgebraElement nf = builtin_element(p, Builtin::num_f);
      AlgebraElement e = nf * nf;
      e -= Rational(p.value + 1) * nf;
      e += fp * fm;
      e += half_p * one;
      e *= Rational(1) / p.value;
      return e;
    }
  }
  throw std::logic_error("unknown builtin");
}

AlgebraElement basis_defining_element(ParaOrder p, const BasisIndex& idx) {
  if (!is_canonical(p, idx))
    throw std::invalid_argument("no defining word for non-canonical index " +
                                to_string(idx));
  Word prefix;
  if (idx.tag == Tag::alpha) {
    prefix.insert(prefix.end(), idx.n, Generator::f_plus);
    prefix.insert(prefix.end(), idx.m, Generator::b_plus);
    return AlgebraElement::word(std::move(prefix));
  }
  prefix.insert(prefix.end(), idx.n - 1, Generator::f_plus);
  prefix.insert(prefix.end(), idx.m - 1, Generator::b_plus);
  return AlgebraElement::word(std::move(prefix)) * builtin_element(p, Builtin::r_plus);
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind {
    plus, minus, lparen, rparen, lbracket, rbracket, lbrace, rbrace,
    comma, number, atom, end
  };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    const auto simple = [&](Token::Kind k) {
      out.push_back({k, std::string(1, c), at});
      ++i;
    };
    if (c == '+') { simple(Token::plus); continue; }
    if (c == '-') { simple(Token::minus); continue; }
    if (c == '(') { simple(Token::lparen); continue; }
    if (c == ')') { simple(Token::rparen); continue; }
    if (c == '[') { simple(Token::lbracket); continue; }
    if (c == ']') { simple(Token::rbracket); continue; }
    if (c == '{') { simple(Token::lbrace); continue; }
    if (c == '}') { simple(Token::rbrace); continue; }
    if (c == ',') { simple(Token::comma); continue; }
    if (c == 'b' || c == 'f' || c == 'R') {
      if (i + 1 < text.size() && (text[i + 1] == '+' || text[i + 1] == '-')) {
        out.push_back({Token::atom, std::string(text.substr(i, 2)), at});
        i += 2;
        continue;
      }
      throw ParseError(std::string("expected '+' or '-' after '") + c + "'", at);
    }
    if (c == 'N') {
      if (i + 2 < text.size() && text[i + 1] == '_' &&
          (text[i + 2] == 'b' || text[i + 2] == 'f' || text[i + 2] == 's')) {
        out.push_back({Token::atom, std::string(text.substr(i, 3)), at});
        i += 3;
        continue;
      }
      throw ParseError("expected 'N_b', 'N_f' or 'N_s'", at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '/') {
        std::size_t k = j + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == j + 1) throw ParseError("expected digits after '/'", j + 1);
        j = k;
      }
      out.push_back({Token::number, std::string(text.substr(i, j - i)), at});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
  out.push_back({Token::end, "", text.size()});
  return out;
}

class ElementParser {
 public:
  ElementParser(ParaOrder p, std::vector<Token> tokens)
      : p_(p), tokens_(std::move(tokens)) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    if (peek().kind != Token::end)
      throw ParseError("trailing input after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  void expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError("expected " + what, peek().pos);
    ++index_;
  }

  static bool starts_factor(const Token& t) {
    switch (t.kind) {
      case Token::number:
      case Token::atom:
      case Token::lparen:
      case Token::lbracket:
      case Token::lbrace:
        return true;
      default:
        return false;
    }
  }

  AlgebraElement expr() {
    bool negate = false;
    if (peek().kind == Token::minus) {
      ++index_;
      negate = true;
    }
    AlgebraElement acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      const bool subtract = advance().kind == Token::minus;
      AlgebraElement t = term();
      if (subtract)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    while (starts_factor(peek())) acc = acc * factor();
    return acc;
  }

  AlgebraElement factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::number: {
        ++index_;
        return rational_from_string(t.text) * AlgebraElement::one();
      }
      case Token::atom: {
        ++index_;
        return atom_element(t.text);
      }
      case Token::lparen: {
        ++index_;
        AlgebraElement e = expr();
        expect(Token::rparen, "')'");
        return e;
      }
      case Token::lbracket: {
        ++index_;
        AlgebraElement a = expr();
        expect(Token::comma, "',' inside commutator");
        AlgebraElement b = expr();
        expect(Token::rbracket, "']'");
        return commutator(a, b);
      }
      case Token::lbrace: {
        ++index_;
        AlgebraElement a = expr();
        expect(Token::comma, "',' inside anticommutator");
        AlgebraElement b = expr();
        expect(Token::rbrace, "'}'");
        return anticommutator(a, b);
      }
      default:
        throw ParseError("expected a number, generator, or bracket", t.pos);
    }
  }

  AlgebraElement atom_element(const std::string& name) const {
    if (auto g = generator_from_string(name)) return AlgebraElement::generator(*g);
    if (name == "R+") return builtin_element(p_, Builtin::r_plus);
    if (name == "R-") return builtin_element(p_, Builtin::r_minus);
    if (name == "N_b") return builtin_element(p_, Builtin::num_b);
    if (name == "N_f") return builtin_element(p_, Builtin::num_f);
    if (name == "N_s") return builtin_element(p_, Builtin::num_s);
    throw std::logic_error("lexer produced unknown atom " + name);
  }

  ParaOrder p_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

AlgebraElement parse_element(ParaOrder p, std::string_view text) {
  return ElementParser(p, lex(text)).parse();
}

// ---------------------------------------------------------------------------
// Ket parser
// ---------------------------------------------------------------------------

namespace {

class KetParser {
 public:
  KetParser(ParaOrder p, std::string_view text) : p_(p), text_(text) {}

  VectorExpr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty ket expression", i_);
    if (text_[i_] == '0' && !std::isdigit(peek_at(i_ + 1))) {
      ++i_;
      skip_ws();
      if (!at_end()) throw ParseError("trailing input after '0'", i_);
      return {};
    }
    VectorExpr out;
    bool first = true;
    while (true) {
      bool negative = false;
      if (first) {
        if (!at_end() && text_[i_] == '-') {
          negative = true;
          ++i_;
        }
      } else {
        if (at_end()) break;
        if (text_[i_] == '+') {
          ++i_;
        } else if (text_[i_] == '-') {
          negative = true;
          ++i_;
        } else {
          throw ParseError("expected '+' or '-' between ket terms", i_);
        }
      }
      skip_ws();
      Rational coeff = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        coeff = number();
        skip_ws();
        if (at_end() || text_[i_] != '*')
          throw ParseError("expected '*' between coefficient and ket", i_);
        ++i_;
        skip_ws();
      }
      BasisIndex idx = ket();
      out.add(idx, negative ? -coeff : coeff);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek_at(std::size_t j) const { return j < text_.size() ? text_[j] : '\0'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  int digits() {
    const std::size_t begin = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (i_ == begin) throw ParseError("expected digits", begin);
    return std::stoi(std::string(text_.substr(begin, i_ - begin)));
  }

  Rational number() {
    const std::size_t begin = i_;
    digits();
    if (!at_end() && text_[i_] == '/') {
      ++i_;
      digits();
    }
    return rational_from_string(text_.substr(begin, i_ - begin));
  }

  BasisIndex ket() {
    const std::size_t at = i_;
    if (at_end() || text_[i_] != '|') throw ParseError("expected '|' opening a ket", i_);
    ++i_;
    skip_ws();
    const int m = digits();
    skip_ws();
    if (!at_end() && text_[i_] == '>') {
      if (m != 0) throw ParseError("only |0> may omit the labels", at);
      ++i_;
      return vacuum_index;
    }
    if (at_end() || text_[i_] != ',') throw ParseError("expected ',' inside ket", i_);
    ++i_;
    skip_ws();
    const int n = digits();
    skip_ws();
    if (at_end() || text_[i_] != ',') throw ParseError("expected ',' inside ket", i_);
    ++i_;
    skip_ws();
    Tag tag;
    if (text_.substr(i_).starts_with("alpha")) {
      tag = Tag::alpha;
      i_ += 5;
    } else if (text_.substr(i_).starts_with("beta")) {
      tag = Tag::beta;
      i_ += 4;
    } else {
      throw ParseError("expected 'alpha' or 'beta'", i_);
    }
    skip_ws();
    if (at_end() || text_[i_] != '>') throw ParseError("expected '>' closing the ket", i_);
    ++i_;
    const BasisIndex idx{m, n, tag};
    if (!is_canonical(p_, idx))
      throw ParseError("ket " + ket_string(idx) + " is not canonical at p=" +
                           std::to_string(p_.value) + "; it reduces to '" +
                           to_string(reduce(p_, m, n, tag, 1)) + "'",
                       at);
    return idx;
  }

  ParaOrder p_;
  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace

VectorExpr parse_ket(ParaOrder p, std::string_view text) {
  return KetParser(p, text).parse();
}

}  // namespace parafock
