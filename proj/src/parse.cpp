#include "ncx/parse.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "ncx/errors.hpp"

namespace ncx {
namespace {

Quaternion unit_with_coeff(int u, Rational coeff) {
  switch (u) {
    case 1: return Quaternion(Rational(0), std::move(coeff), Rational(0), Rational(0));
    case 2: return Quaternion(Rational(0), Rational(0), std::move(coeff), Rational(0));
    default: return Quaternion(Rational(0), Rational(0), Rational(0), std::move(coeff));
  }
}

// Recursive descent with non-mutating lookahead: pos_ only ever advances over
// consumed tokens (plus the whitespace in front of them), so node spans end
// exactly after the last consumed character.
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuatNode quaternion_whole() {
    QuatNode q = quaternion();
    expect_end();
    return q;
  }

  VectorNode vector_whole() {
    VectorNode v = vector();
    expect_end();
    return v;
  }

  MatrixNode matrix_whole() {
    MatrixNode m = matrix();
    expect_end();
    return m;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  std::size_t scan_ws(std::size_t p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p;
  }

  char peek() const {
    const std::size_t p = scan_ws(pos_);
    return p < text_.size() ? text_[p] : '\0';
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::size_t p = scan_ws(pos_);
    const std::string found =
        p < text_.size() ? std::string("'") + text_[p] + "'" : "end of input";
    throw ParseError(p, expected, found);
  }

  bool consume(char c) {
    const std::size_t p = scan_ws(pos_);
    if (p < text_.size() && text_[p] == c) {
      pos_ = p + 1;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(what);
  }

  void expect_end() const {
    if (scan_ws(pos_) < text_.size()) fail("end of input");
  }

  static int unit_index(char c) {
    switch (c) {
      case 'i': return 1;
      case 'j': return 2;
      case 'k': return 3;
      default: return 0;
    }
  }

  Int digits() {
    std::size_t p = scan_ws(pos_);
    std::string ds;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p])))
      ds += text_[p++];
    if (ds.empty()) fail("a digit");
    pos_ = p;
    return Int(ds);
  }

  // rat := int ["/" posint]
  Rational rat() {
    Int num = digits();
    if (consume('/')) {
      const std::size_t den_pos = scan_ws(pos_);
      Int den = digits();
      if (den == 0) throw ParseError(den_pos, "a positive denominator", "0");
      return Rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
  }

  bool consume_unit(int& u) {
    u = unit_index(peek());
    if (u == 0) return false;
    pos_ = scan_ws(pos_) + 1;
    return true;
  }

  // term := unit | rat [unit]
  Quaternion term() {
    int u = 0;
    if (consume_unit(u)) return unit_with_coeff(u, Rational(1));
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a term (a rational or one of i, j, k)");
    Rational coeff = rat();
    if (consume_unit(u)) return unit_with_coeff(u, std::move(coeff));
    return Quaternion(std::move(coeff));
  }

  // quat := ["-"] term { ("+"|"-") term }
  QuatNode quaternion() {
    const std::size_t begin = scan_ws(pos_);
    Quaternion acc = consume('-') ? -term() : term();
    std::size_t end = pos_;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      pos_ = scan_ws(pos_) + 1;
      const Quaternion t = term();
      acc = c == '+' ? acc + t : acc - t;
      end = pos_;
    }
    return {acc, {begin, end}};
  }

  // vector := "[" quat "," quat "]"
  VectorNode vector() {
    const std::size_t begin = scan_ws(pos_);
    expect('[', "'['");
    QuatNode first = quaternion();
    expect(',', "','");
    QuatNode second = quaternion();
    expect(']', "']'");
    VectorNode v;
    v.value = Vec2<Quaternion>(first.value, second.value);
    v.components[0] = first;
    v.components[1] = second;
    v.span = {begin, pos_};
    return v;
  }

  // matrix := "[" row ";" row "]", rows of equal length >= 2
  MatrixNode matrix() {
    const std::size_t begin = scan_ws(pos_);
    expect('[', "'['");
    MatrixNode m;
    m.rows.resize(2);
    m.rows[0] = row();
    expect(';', "';'");
    m.rows[1] = row();
    const std::size_t close_pos = scan_ws(pos_);
    expect(']', "']'");
    if (m.rows[0].size() != m.rows[1].size())
      throw ParseError(close_pos, "rows of equal length",
                       std::to_string(m.rows[0].size()) + " vs " +
                           std::to_string(m.rows[1].size()) + " entries");
    if (m.rows[0].size() < 2)
      throw ParseError(close_pos, "at least 2 columns",
                       std::to_string(m.rows[0].size()) + " column");
    for (std::size_t c = 0; c < m.rows[0].size(); ++c)
      m.columns.emplace_back(m.rows[0][c].value, m.rows[1][c].value);
    m.span = {begin, pos_};
    return m;
  }

  std::vector<QuatNode> row() {
    std::vector<QuatNode> out;
    out.push_back(quaternion());
    while (consume(',')) out.push_back(quaternion());
    return out;
  }
};

} // namespace

QuatNode parse_quaternion(std::string_view text) {
  return Parser(text).quaternion_whole();
}

VectorNode parse_vector(std::string_view text) {
  return Parser(text).vector_whole();
}

MatrixNode parse_matrix(std::string_view text) {
  return Parser(text).matrix_whole();
}

} // namespace ncx
