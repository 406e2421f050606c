#include "uqa/parse.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace uqa {

namespace {

/// Either a bare scalar or an algebra element; scalars stay bare until they
/// meet a generator so that parse_scalar needs no algebra.
struct Value {
  bool bare = true;
  Scalar s;
  AlgebraElement a;
};

class Parser {
 public:
  Parser(std::string_view text, const UqAlgebra* alg, const CartanDatum* datum)
      : text_(text), alg_(alg), datum_(datum) {}

  Value parse_all() {
    Value v = element();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  Weight weight_all() {
    Weight w = weight();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<int>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  /// Node index directly after a generator letter, converted to 0-based.
  int node_index() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a node index");
    const std::size_t at = pos_;
    const long i = integer();
    const int rank = datum_ ? datum_->rank() : 0;
    if (i < 1 || i > rank) throw ParseError("unknown node index " + std::to_string(i), at);
    return static_cast<int>(i) - 1;
  }

  const UqAlgebra& algebra() {
    if (!alg_) fail("generators are not allowed in a scalar");
    return *alg_;
  }

  AlgebraElement lift(const Value& v) { return v.bare ? v.s * algebra().one() : v.a; }

  Value add(Value x, const Value& y, bool minus) {
    if (x.bare && y.bare) {
      x.s = minus ? x.s - y.s : x.s + y.s;
      return x;
    }
    AlgebraElement a = lift(x);
    if (minus) {
      a -= lift(y);
    } else {
      a += lift(y);
    }
    return Value{false, {}, std::move(a)};
  }

  Value mul(const Value& x, const Value& y) {
    if (x.bare && y.bare) return Value{true, x.s * y.s, {}};
    if (x.bare) return Value{false, {}, x.s * y.a};
    if (y.bare) return Value{false, {}, y.s * x.a};
    return Value{false, {}, algebra().multiply(x.a, y.a)};
  }

  Value element() {
    Value v;
    bool minus = false;
    if (accept('-')) {
      minus = true;
    } else {
      accept('+');
    }
    v = add(Value{}, term(), minus);
    while (true) {
      if (accept('+')) {
        v = add(std::move(v), term(), false);
      } else if (accept('-')) {
        v = add(std::move(v), term(), true);
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(' || c == 'E' || c == 'F' || c == 'K';
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (accept('*')) {
        v = mul(v, factor());
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Value d = factor();
        const Scalar s = scalar_of(d, at);
        if (s.is_zero()) throw ParseError("division by zero", at);
        v = mul(v, Value{true, s.inverse(), {}});
      } else if (starts_factor()) {
        v = mul(v, factor());
      } else {
        return v;
      }
    }
  }

  /// The scalar c when v is c or c*1.
  Scalar scalar_of(const Value& v, std::size_t at) {
    if (v.bare) return v.s;
    if (v.a.is_zero()) return Scalar();
    if (v.a.size() == 1) {
      const auto& [m, c] = *v.a.terms().begin();
      if (m.f.empty() && m.e.empty() && m.torus.is_zero()) return c;
    }
    throw ParseError("divisor is not a scalar", at);
  }

  Value factor() {
    Value base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const bool neg = accept('-');
    if (!neg) accept('+');
    const long n = integer();
    return power(base, neg ? -n : n, at);
  }

  Value power(const Value& base, long n, std::size_t at) {
    if (base.bare) {
      if (n < 0 && base.s.is_zero()) throw ParseError("zero to a negative power", at);
      return Value{true, base.s.pow(static_cast<int>(n)), {}};
    }
    if (n < 0) {
      if (base.a.size() != 1) throw ParseError("negative power of a non-monomial", at);
      const auto& [m, c] = *base.a.terms().begin();
      if (!m.f.empty() || !m.e.empty()) throw ParseError("negative power of a non-torus element", at);
      const int k = static_cast<int>(-n);
      return Value{false, {}, c.pow(static_cast<int>(n)) * algebra().K((-k) * m.torus)};
    }
    AlgebraElement r = algebra().one();
    for (long k = 0; k < n; ++k) r = algebra().multiply(r, base.a);
    return Value{false, {}, std::move(r)};
  }

  Value atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Value{true, Scalar(integer()), {}};
    if (c == 'q') {
      ++pos_;
      return Value{true, Scalar::q_power(1), {}};
    }
    if (c == '(') {
      ++pos_;
      Value v = element();
      expect(')');
      return v;
    }
    if (c == 'E' || c == 'F') {
      ++pos_;
      const UqAlgebra& alg = algebra();
      const int i = node_index();
      return Value{false, {}, c == 'E' ? alg.E(i) : alg.F(i)};
    }
    if (c == 'K') {
      ++pos_;
      const UqAlgebra& alg = algebra();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Weight w = weight();
        expect(')');
        return Value{false, {}, alg.K(w)};
      }
      return Value{false, {}, alg.K_alpha(node_index())};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Weight weight() {
    if (!datum_) fail("weights need a root datum");
    Weight w = Weight::zero(datum_->rank());
    if (peek() == '0') {
      const std::size_t save = pos_;
      ++pos_;
      if (peek() != '*' && !(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))) return w;
      pos_ = save;
    }
    bool minus = accept('-');
    if (!minus) accept('+');
    while (true) {
      long coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = integer();
        accept('*');
      }
      const char basis = peek();
      if (basis != 'w' && basis != 'a') fail("expected w<i> or a<i>");
      ++pos_;
      const int i = node_index();
      const int k = static_cast<int>(minus ? -coeff : coeff);
      if (basis == 'w') {
        w.coords[static_cast<std::size_t>(i)] += k;
      } else {
        w += k * datum_->simple_root(i);
      }
      if (accept('+')) {
        minus = false;
      } else if (accept('-')) {
        minus = true;
      } else {
        return w;
      }
    }
  }

  std::string_view text_;
  const UqAlgebra* alg_;
  const CartanDatum* datum_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Parser p(text, nullptr, nullptr);
  Value v = p.parse_all();
  return v.s;
}

Weight parse_weight(std::string_view text, const CartanDatum& datum) {
  Parser p(text, nullptr, &datum);
  return p.weight_all();
}

AlgebraElement parse_element(std::string_view text, const UqAlgebra& alg) {
  Parser p(text, &alg, &alg.datum());
  Value v = p.parse_all();
  return v.bare ? v.s * alg.one() : v.a;
}

std::string render_monomial(const Monomial& m) {
  std::ostringstream os;
  const char* sep = "";
  for (auto i : m.f) {
    os << sep << 'F' << static_cast<int>(i) + 1;
    sep = " ";
  }
  if (!m.torus.is_zero()) {
    os << sep << "K(" << m.torus.to_string() << ')';
    sep = " ";
  }
  for (auto i : m.e) {
    os << sep << 'E' << static_cast<int>(i) + 1;
    sep = " ";
  }
  const std::string s = os.str();
  return s.empty() ? "1" : s;
}

std::string render_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool unit = m.f.empty() && m.e.empty() && m.torus.is_zero();
    const Scalar minus_one(-1);
    std::string piece;
    if (c.is_one()) {
      piece = (first ? "" : " + ") + render_monomial(m);
    } else if (c == minus_one) {
      piece = (first ? "-" : " - ") + render_monomial(m);
    } else {
      piece = (first ? "" : " + ") + ("(" + c.to_string() + ")") + (unit ? "" : " " + render_monomial(m));
    }
    out += piece;
    first = false;
  }
  return out;
}

}  // namespace uqa
