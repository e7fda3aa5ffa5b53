#include "confcoh/parse.hpp"

#include <cctype>

namespace confcoh {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatPoly run() {
    RatPoly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatPoly expr() {
    RatPoly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  RatPoly term() {
    RatPoly p = unary();
    while (eat('*')) p *= unary();
    return p;
  }

  RatPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatPoly power() {
    RatPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  RatPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("expected denominator");
        BigInt den = integer();
        if (den == 0) fail("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return RatPoly(r);
      }
      return RatPoly(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      return RatPoly::var(variable(id, start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  VarId variable(std::string_view id, std::size_t start) {
    if (id == "d") return VarId::del();
    if (id == "lam") return VarId::lam(1);
    if (id.size() > 3 && id.substr(0, 3) == "lam") {
      std::string_view rest = id.substr(3);
      bool digits = true;
      for (char ch : rest) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
      if (digits) {
        if (rest.size() > 6 || rest[0] == '0') {
          pos_ = start;
          fail("bad lam index");
        }
        return VarId::lam(std::stoi(std::string(rest)));
      }
    }
    return VarId::param(id);
  }
};

}  // namespace

RatPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace confcoh
