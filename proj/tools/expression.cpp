#include "expression.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace iqc::cli {

namespace {

class Parser {
 public:
  Parser(const GeneratorTable& table, std::string_view text) : table_(table), text_(text) {}

  TorusElement parse() {
    TorusElement value = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  int integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return negative ? -value : value;
  }

  TorusElement constant(const QScalar& c) const { return TorusElement::constant(table_.seed, c); }

  QScalar as_scalar(const TorusElement& f) {
    const std::vector<int> zero(table_.seed->size(), 0);
    if (f.is_zero()) return QScalar();
    if (f.size() != 1 || f.terms().begin()->first != zero) fail("expected a constant");
    return f.terms().begin()->second;
  }

  TorusElement expr() {
    TorusElement value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  TorusElement term() {
    TorusElement value = unary();
    for (;;) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const QScalar d = as_scalar(unary());
        if (d.is_zero()) fail("division by zero");
        value *= d.inverse();
      } else {
        return value;
      }
    }
  }

  TorusElement unary() {
    if (accept('-')) return -unary();
    return power();
  }

  // Doubled exponent: an integer, or (a) or (a/2).
  int exponent() {
    if (!accept('(')) return 2 * integer();
    const int value = integer();
    if (accept('/')) {
      if (integer() != 2) fail("only halves are supported in exponents");
      expect(')');
      return value;
    }
    expect(')');
    return 2 * value;
  }

  TorusElement power() {
    skip();
    if (accept_word("q")) {
      int twice = 2;
      if (accept('^')) twice = exponent();
      return constant(QScalar::q_power(twice));
    }
    TorusElement base = atom();
    if (!accept('^')) return base;
    const int twice = exponent();
    if (twice % 2 != 0) fail("half-integer powers apply to q only");
    return iqc::power(base, twice / 2);
  }

  int index_argument() {
    expect('(');
    const int i = integer();
    expect(')');
    if (i < 1 || i > table_.n) fail("generator index out of range");
    return i;
  }

  Generator generator() {
    if (accept_word("B") || accept_word("iota_B")) return {Generator::Kind::B, index_argument()};
    if (accept_word("k") || accept_word("iota_k")) return {Generator::Kind::K, index_argument()};
    fail("expected B(j) or k(j)");
  }

  TorusElement atom() {
    skip();
    if (accept('(')) {
      TorusElement value = expr();
      expect(')');
      return value;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return constant(integer());
    if (accept_word("kinv")) return table_.iota_k_inv.at(index_argument() - 1);
    if (accept_word("X")) {
      const char close = accept('[') ? ']' : (expect('('), ')');
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != close) ++pos_;
      std::string label(text_.substr(start, pos_ - start));
      while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
      expect(close);
      auto v = table_.seed->find(label);
      if (!v) fail("unknown vertex " + label);
      return TorusElement::generator(table_.seed, *v);
    }
    if (accept_word("T")) {
      expect('[');
      std::vector<int> word;
      if (!accept(']')) {
        do {
          const int i = integer();
          if (i < 1 || i > table_.n) fail("braid index out of range");
          word.push_back(i);
        } while (accept(','));
        expect(']');
      }
      expect('(');
      const Generator g = generator();
      expect(')');
      return braid_T(table_, word, g);
    }
    const std::size_t before = pos_;
    try {
      const Generator g = generator();
      return g.kind == Generator::Kind::B ? table_.b(g.index) : table_.k(g.index);
    } catch (const ParseError&) {
      pos_ = before;
      fail("expected a number, q, a generator, X(label) or T[...](...)");
    }
  }

  const GeneratorTable& table_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusElement parse_expression(const GeneratorTable& table, std::string_view text) { return Parser(table, text).parse(); }

}  // namespace iqc::cli
