#include "stconv/expr.hpp"

#include <cctype>
#include <string>

#include "stconv/chars.hpp"
#include "stconv/error.hpp"

namespace stconv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Group group) : text_(text), group_(group) {}

  ClassFunction run() {
    ClassFunction f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error,
                what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  ClassFunction expr() {
    ClassFunction f = term();
    for (;;) {
      if (eat('+'))
        f += term();
      else if (eat('-'))
        f -= term();
      else
        return f;
    }
  }

  ClassFunction term() {
    ClassFunction f = unary();
    while (eat('*')) f *= unary();
    return f;
  }

  ClassFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  ClassFunction power() {
    ClassFunction base = atom();
    if (!eat('^')) return base;
    const std::int64_t n = integer();
    if (n > 64) fail("exponent too large");
    return base.pow(static_cast<int>(n));
  }

  ClassFunction atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ClassFunction f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ClassFunction::constant(group_, integer());
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // A name runs over letters, digits, '_' and brace groups such as {-3} or {2,1}.
  ClassFunction name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else if (c == '{') {
        const auto close = text_.find('}', pos_);
        if (close == std::string_view::npos) fail("unbalanced '{'");
        pos_ = close + 1;
      } else {
        break;
      }
    }
    const std::string id(text_.substr(start, pos_ - start));
    if (id == "a1") return coefficient_char(group_, 1);
    if (id == "a2") return coefficient_char(group_, 2);
    if (id.size() > 1 && id[0] == 's' &&
        id.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int n = std::stoi(id.substr(1));
      if (n < 1) fail("power sums start at s1");
      return power_sum_char(group_, 1, n);
    }
    try {
      return char_poly(parse_label(id, group_));
    } catch (const Error& e) {
      if (e.code() != Errc::parse_error && e.code() != Errc::invalid_argument) throw;
      pos_ = start;
      fail("unknown name '" + id + "' for " + to_string(group_));
    }
  }

  std::string_view text_;
  Group group_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassFunction parse_character(std::string_view text, Group group) { return Parser(text, group).run(); }

}  // namespace stconv
