#include "singcat/parser.hpp"

#include <cctype>
#include <set>

namespace singcat {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, comma, lbracket, rbracket, slash, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  Lexer(const std::string& s, std::size_t base) : s_(s), base_(base) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  void expect(Tok k, const char* what) {
    if (tok_.kind != k) throw ParseError(std::string("expected ") + what, base_ + tok_.offset);
    advance();
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Tok::end, "", pos_};
      return;
    }
    char c = s_[pos_];
    auto one = [&](Tok k) {
      tok_ = {k, std::string(1, c), pos_};
      ++pos_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Tok::number, s_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = {Tok::ident, s_.substr(start, pos_ - start), start};
      return;
    }
    switch (c) {
      case '+': one(Tok::plus); return;
      case '-': one(Tok::minus); return;
      case '*': one(Tok::star); return;
      case '^': one(Tok::caret); return;
      case '(': one(Tok::lparen); return;
      case ')': one(Tok::rparen); return;
      case ',': one(Tok::comma); return;
      case '[': one(Tok::lbracket); return;
      case ']': one(Tok::rbracket); return;
      case '/': one(Tok::slash); return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", base_ + pos_);
    }
  }

  const std::string& s_;
  std::size_t base_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, "", 0};
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const AmbientPtr& ambient, std::size_t base)
      : lex_(lex), ambient_(ambient), base_(base) {}

  Polynomial expression() {
    bool neg = false;
    if (lex_.peek().kind == Tok::plus) {
      lex_.take();
    } else if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      neg = true;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool minus = lex_.take().kind == Tok::minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Tok::star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.peek().kind == Tok::caret) {
      Token caret = lex_.take();
      if (lex_.peek().kind != Tok::number)
        throw ParseError("expected a nonnegative integer exponent", base_ + caret.offset + 1);
      Token e = lex_.take();
      unsigned long exp = std::stoul(e.text);
      return base.pow(static_cast<unsigned>(exp));
    }
    return base;
  }

  Polynomial atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::number: {
        // Optional "/q" makes a rational literal; '/' is not a general operator.
        std::string lit = t.text;
        if (lex_.peek().kind == Tok::slash) {
          lex_.take();
          if (lex_.peek().kind != Tok::number)
            throw ParseError("expected denominator after '/'", base_ + lex_.peek().offset);
          Token d = lex_.take();
          if (d.text.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator", base_ + d.offset);
          lit += "/" + d.text;
        }
        return Polynomial::constant(ambient_, ambient_->field.parse(lit));
      }
      case Tok::ident: {
        int idx = ambient_->var_index(t.text);
        if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", base_ + t.offset);
        return Polynomial::variable(ambient_, static_cast<std::size_t>(idx));
      }
      case Tok::lparen: {
        Polynomial inner = expression();
        if (lex_.peek().kind != Tok::rparen)
          throw ParseError("expected ')'", base_ + lex_.peek().offset);
        lex_.take();
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '('", base_ + t.offset);
    }
  }

  Lexer& lex_;
  const AmbientPtr& ambient_;
  std::size_t base_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const AmbientPtr& ambient) {
  Lexer lex(text, 0);
  PolyParser parser(lex, ambient, 0);
  Polynomial p = parser.expression();
  if (lex.peek().kind != Tok::end)
    throw ParseError("trailing input after polynomial", lex.peek().offset);
  return p;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const AmbientPtr& ambient) {
  std::vector<Polynomial> out;
  Lexer lex(text, 0);
  if (lex.peek().kind == Tok::end) return out;
  PolyParser parser(lex, ambient, 0);
  out.push_back(parser.expression());
  while (lex.peek().kind == Tok::comma) {
    lex.take();
    out.push_back(parser.expression());
  }
  if (lex.peek().kind != Tok::end)
    throw ParseError("trailing input after polynomial list", lex.peek().offset);
  return out;
}

ParsedRingSpec parse_ring_spec(const std::string& text) {
  Lexer lex(text, 0);
  Token f = lex.take();
  if (f.kind != Tok::ident) throw ParseError("expected field name (QQ or F<p>)", f.offset);

  Field field = Field::rationals();
  if (f.text == "QQ") {
    field = Field::rationals();
  } else if (f.text.size() > 1 && f.text[0] == 'F' &&
             f.text.find_first_not_of("0123456789", 1) == std::string::npos) {
    unsigned long p = std::stoul(f.text.substr(1));
    try {
      field = Field::prime(p);
    } catch (const HypothesisError& e) {
      throw ParseError(e.what(), f.offset);
    }
  } else {
    throw ParseError("unknown field '" + f.text + "' (expected QQ or F<p>)", f.offset);
  }

  lex.expect(Tok::lbracket, "'['");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (;;) {
    Token v = lex.take();
    if (v.kind != Tok::ident) throw ParseError("expected a variable name", v.offset);
    if (!seen.insert(v.text).second)
      throw ParseError("duplicate variable '" + v.text + "'", v.offset);
    vars.push_back(v.text);
    if (lex.peek().kind == Tok::comma) {
      lex.take();
      continue;
    }
    break;
  }
  lex.expect(Tok::rbracket, "']'");
  lex.expect(Tok::slash, "'/'");
  lex.expect(Tok::lparen, "'('");

  AmbientPtr ambient = make_ambient(field, vars);
  std::vector<Polynomial> relations;
  if (lex.peek().kind != Tok::rparen) {
    PolyParser parser(lex, ambient, 0);
    relations.push_back(parser.expression());
    while (lex.peek().kind == Tok::comma) {
      lex.take();
      relations.push_back(parser.expression());
    }
  }
  lex.expect(Tok::rparen, "')'");
  if (lex.peek().kind != Tok::end)
    throw ParseError("trailing input after ring spec", lex.peek().offset);

  return ParsedRingSpec{field, std::move(vars), std::move(relations), std::move(ambient)};
}

}  // namespace singcat
