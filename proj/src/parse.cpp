#include "parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace germcalc {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  int col;  // 1-based
};

class Lexer {
 public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  int line() const { return line_; }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, "", col};
      return;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Token::Number, s_.substr(start, pos_ - start), col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Ident, s_.substr(start, pos_ - start), col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+", col}; return;
      case '-': tok_ = {Token::Minus, "-", col}; return;
      case '*': tok_ = {Token::Star, "*", col}; return;
      case '^': tok_ = {Token::Caret, "^", col}; return;
      case '/': tok_ = {Token::Slash, "/", col}; return;
      case '(': tok_ = {Token::LParen, "(", col}; return;
      case ')': tok_ = {Token::RParen, ")", col}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
    }
  }

  const std::string& s_;
  int line_;
  size_t pos_ = 0;
  Token tok_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

  Poly parse_expr() {
    int sign = 1;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      if (lex_.next().kind == Token::Minus) sign = -sign;
    }
    Poly result = Rational(sign) * parse_term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      const bool minus = lex_.next().kind == Token::Minus;
      Poly t = parse_term();
      if (minus)
        result -= t;
      else
        result += t;
    }
    return result;
  }

 private:
  bool starts_factor() const {
    const auto k = lex_.peek().kind;
    return k == Token::Number || k == Token::Ident || k == Token::LParen;
  }

  Poly parse_term() {
    Poly result = parse_factor();
    for (;;) {
      if (lex_.peek().kind == Token::Star) {
        lex_.next();
        result = result * parse_factor();
      } else if (lex_.peek().kind == Token::Slash) {
        // rational written as a/b
        Token slash = lex_.next();
        Poly denom = parse_factor();
        if (denom.degree() > 0 || denom.is_zero())
          throw ParseError("'/' only divides by a nonzero constant", lex_.line(), slash.col);
        result = Rational(1) / denom.constant_term() * result;
      } else if (starts_factor()) {
        result = result * parse_factor();  // implicit multiplication
      } else {
        return result;
      }
    }
  }

  Poly parse_factor() {
    Poly base = parse_primary();
    if (lex_.peek().kind == Token::Caret) {
      Token caret = lex_.next();
      if (lex_.peek().kind != Token::Number)
        throw ParseError("expected integer exponent after '^'", lex_.line(), caret.col);
      Token e = lex_.next();
      base = base.pow(std::stoi(e.text));
    }
    return base;
  }

  Poly parse_primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Number:
        return Poly::constant(ring_, Rational(t.text));
      case Token::Ident: {
        const int idx = ring_->index_of(t.text);
        if (idx < 0)
          throw ParseError("unknown variable '" + t.text + "'", lex_.line(), t.col);
        return Poly::variable(ring_, idx);
      }
      case Token::LParen: {
        Poly inner = parse_expr();
        if (lex_.peek().kind != Token::RParen)
          throw ParseError("expected ')'", lex_.line(), lex_.peek().col);
        lex_.next();
        return inner;
      }
      case Token::Minus:
        return -parse_primary();
      default:
        throw ParseError("expected a number, variable or '('", lex_.line(), t.col);
    }
  }

  Lexer& lex_;
  const RingPtr& ring_;
};

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Split "( p1, p2, p3 )" at top-level commas.
std::vector<std::string> split_tuple(const std::string& s, int line) {
  std::string body = strip(s);
  if (body.empty() || body.front() != '(' || body.back() != ')')
    throw ParseError("expected a parenthesized tuple", line, 1);
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(strip(cur));
  return parts;
}

}  // namespace

Poly parse_poly_line(const std::string& text, const RingPtr& ring, int line) {
  Lexer lex(text, line);
  PolyParser parser(lex, ring);
  Poly p = parser.parse_expr();
  if (lex.peek().kind != Token::End)
    throw ParseError("trailing input after polynomial", line, lex.peek().col);
  return p;
}

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  return parse_poly_line(text, ring, 1);
}

MultiGerm parse_germ_string(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  RingPtr ring;
  int target_dim = -1;
  std::vector<MonoGerm> branches;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", lineno, 1);
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));

    if (key == "source_vars") {
      if (value.empty() || value.front() != '[' || value.back() != ']')
        throw ParseError("source_vars expects [a, b, ...]", lineno, static_cast<int>(eq) + 2);
      std::vector<std::string> vars;
      std::string cur;
      for (char c : value.substr(1, value.size() - 2)) {
        if (c == ',') {
          vars.push_back(strip(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!strip(cur).empty()) vars.push_back(strip(cur));
      for (const auto& v : vars)
        if (v.empty()) throw ParseError("empty variable name", lineno, 1);
      ring = make_ring(vars);
    } else if (key == "target_dim") {
      target_dim = std::stoi(value);
    } else if (key == "branch") {
      if (!ring) throw ParseError("branch before source_vars", lineno, 1);
      if (target_dim < 1) throw ParseError("branch before target_dim", lineno, 1);
      std::vector<std::string> parts = split_tuple(value, lineno);
      if (static_cast<int>(parts.size()) != target_dim)
        throw ParseError("branch has " + std::to_string(parts.size()) +
                             " components, target_dim is " + std::to_string(target_dim),
                         lineno, 1);
      std::vector<Poly> comps;
      for (const std::string& part : parts)
        comps.push_back(part == "0" ? Poly::zero(ring) : parse_poly_line(part, ring, lineno));
      try {
        branches.emplace_back(ring, std::move(comps));
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }

  if (branches.empty()) throw ParseError("no branches in germ file", lineno, 1);
  return MultiGerm(std::move(branches));
}

MultiGerm parse_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open germ file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_string(buf.str());
}

std::string germ_to_string(const MultiGerm& g) {
  std::ostringstream os;
  os << "source_vars = [";
  const auto& vars = g.branches.front().source->vars();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ", ";
    os << vars[i];
  }
  os << "]\n";
  os << "target_dim = " << g.p() << "\n";
  for (const MonoGerm& b : g.branches) {
    os << "branch = (";
    for (int i = 0; i < b.p(); ++i) {
      if (i) os << ",";
      os << " " << b.comps[i].to_string();
    }
    os << " )\n";
  }
  return os.str();
}

}  // namespace germcalc
