#include "uqa/scalar.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <utility>

namespace uqa {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpz_class& c) { return Poly({c}); }

Poly Poly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  if (k >= c_.size()) return {};
  return Poly(std::vector<mpz_class>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  std::vector<mpz_class> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return divided_exact(g);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(v));
}

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

Poly Poly::divided_exact(const mpz_class& c) const {
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
  std::vector<mpz_class> r = a.c_;
  std::vector<mpz_class> quot(a.c_.size() - b.c_.size() + 1);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) {
      throw std::logic_error("inexact polynomial division");
    }
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    quot[k] = f;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), f.get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  for (const auto& x : r) {
    if (x != 0) throw std::logic_error("inexact polynomial division");
  }
  return Poly(std::move(quot));
}

Poly Poly::pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  std::vector<mpz_class> r = a.c_;
  const int db = b.degree();
  const mpz_class& lb = b.lead();
  int dr = a.degree();
  while (dr >= db) {
    const mpz_class lr = r[dr];
    for (auto& x : r) x *= lb;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
  }
  return Poly(std::move(r));
}

Poly Poly::gcd(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  Poly a = a0.primitive_part();
  Poly b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return constant(1);
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a;
}

mpq_class Poly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long n) : Scalar(mpq_class(n)) {}

Scalar::Scalar(const mpq_class& c) : content_(c), num_(), den_(Poly::constant(1)) {
  content_.canonicalize();
  if (content_ != 0) num_ = Poly::constant(1);
}

bool Scalar::is_one() const {
  return exp_ == 0 && content_ == 1 && num_.degree() == 0 && den_.degree() == 0;
}

Scalar Scalar::make(mpq_class content, long exp, Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (content == 0 || num.is_zero()) return {};
  const std::size_t kn = num.low_order();
  const std::size_t kd = den.low_order();
  num = num.shifted_down(kn);
  den = den.shifted_down(kd);
  exp += static_cast<long>(kn) - static_cast<long>(kd);
  if (exp > INT_MAX || exp < INT_MIN) throw std::overflow_error("q exponent overflow");

  mpz_class cn = num.content();
  mpz_class cd = den.content();
  if (num.lead() < 0) cn = -cn;
  if (den.lead() < 0) cd = -cd;
  num = num.divided_exact(cn);
  den = den.divided_exact(cd);
  content *= mpq_class(cn, cd);
  content.canonicalize();

  if (den.degree() > 0 && num.degree() > 0) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divide_exact(num, g);
      den = Poly::divide_exact(den, g);
    }
  }
  return Scalar(std::move(content), static_cast<int>(exp), std::move(num), std::move(den));
}

Scalar Scalar::normalize(const Poly& num, const Poly& den) {
  return make(1, 0, num, den);
}

Scalar Scalar::q_power(int k, const mpq_class& c) {
  if (c == 0) return {};
  mpq_class cc = c;
  cc.canonicalize();
  return Scalar(cc, k, Poly::constant(1), Poly::constant(1));
}

Scalar Scalar::laurent(int low, const std::vector<mpz_class>& coeffs) {
  return make(1, low, Poly(coeffs), Poly::constant(1));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.content_ = -r.content_;
  return r;
}

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int e = std::min(a.exp_, b.exp_);
  const Poly an = a.num_.shifted_up(static_cast<std::size_t>(a.exp_ - e));
  const Poly bn = b.num_.shifted_up(static_cast<std::size_t>(b.exp_ - e));
  const mpz_class l = lcm(a.content_.get_den(), b.content_.get_den());
  const mpz_class fa = a.content_.get_num() * (l / a.content_.get_den());
  const mpz_class fb = b.content_.get_num() * (l / b.content_.get_den());
  const mpq_class content(1, l);
  if (a.den_ == b.den_) {
    return Scalar::make(content, e, an.scaled(fa) + bn.scaled(fb), a.den_);
  }
  const Poly g = Poly::gcd(a.den_, b.den_);
  const Poly ad = g.degree() > 0 ? Poly::divide_exact(a.den_, g) : a.den_;
  const Poly bd = g.degree() > 0 ? Poly::divide_exact(b.den_, g) : b.den_;
  return Scalar::make(content, e, an.scaled(fa) * bd + bn.scaled(fb) * ad, a.den_ * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0 && an.degree() > 0) {
    Poly g = Poly::gcd(an, bd);
    if (g.degree() > 0) {
      an = Poly::divide_exact(an, g);
      bd = Poly::divide_exact(bd, g);
    }
  }
  if (ad.degree() > 0 && bn.degree() > 0) {
    Poly g = Poly::gcd(bn, ad);
    if (g.degree() > 0) {
      bn = Poly::divide_exact(bn, g);
      ad = Poly::divide_exact(ad, g);
    }
  }
  mpq_class c = a.content_ * b.content_;
  const long e = static_cast<long>(a.exp_) + b.exp_;
  if (e > INT_MAX || e < INT_MIN) throw std::overflow_error("q exponent overflow");
  return Scalar(std::move(c), static_cast<int>(e), an * bn, ad * bd);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the zero scalar");
  return Scalar(1 / content_, -exp_, den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int k) const {
  Scalar base = k < 0 ? inverse() : *this;
  unsigned n = static_cast<unsigned>(k < 0 ? -static_cast<long>(k) : k);
  Scalar r = 1;
  while (n) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return r;
}

mpq_class Scalar::evaluate_at(const mpq_class& q0) const {
  if (is_zero()) return 0;
  if (q0 == 0) {
    if (exp_ < 0) throw DivisionByZero("pole at q = 0");
    if (exp_ > 0) return 0;
  }
  const mpq_class d = den_.evaluate(q0);
  if (d == 0) throw DivisionByZero("pole at q = " + q0.get_str());
  mpq_class p = 1;
  for (int i = 0; i < (exp_ < 0 ? -exp_ : exp_); ++i) p *= q0;
  if (exp_ < 0) p = 1 / p;
  mpq_class r = content_ * p * num_.evaluate(q0) / d;
  r.canonicalize();
  return r;
}

namespace {

// Renders sum_k coeffs[k] q^(low+k) from the highest power down.
std::string render_laurent(int low, const std::vector<mpz_class>& coeffs, bool* multi) {
  std::ostringstream os;
  int count = 0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    const int p = low + k;
    const bool neg = c < 0;
    const mpz_class mag = neg ? mpz_class(-c) : c;
    if (count == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (p == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (p != 1) os << "^" << p;
    }
    ++count;
  }
  if (count == 0) os << "0";
  if (multi) *multi = count > 1;
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::vector<mpz_class> top = num_.coeffs();
  for (auto& x : top) x *= content_.get_num();
  bool multi = false;
  std::string n = render_laurent(exp_, top, &multi);
  if (den_.degree() == 0 && content_.get_den() == 1) return n;
  std::vector<mpz_class> bottom = den_.coeffs();
  for (auto& x : bottom) x *= content_.get_den();
  bool dmulti = false;
  std::string d = render_laurent(0, bottom, &dmulti);
  std::string out = multi ? "(" + n + ")" : n;
  out += "/";
  out += dmulti ? "(" + d + ")" : d;
  return out;
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

Scalar q_integer(int n, int d) {
  if (d <= 0) throw std::invalid_argument("q_integer: d must be positive");
  if (n == 0) return {};
  const int m = n < 0 ? -n : n;
  // q^{d(m-1)} + q^{d(m-3)} + ... + q^{-d(m-1)}
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(2 * d * (m - 1) + 1));
  for (int k = 0; k < m; ++k) coeffs[static_cast<std::size_t>(2 * d * k)] = n < 0 ? -1 : 1;
  return Scalar::laurent(-d * (m - 1), coeffs);
}

Scalar q_factorial(int n, int d) {
  Scalar r = 1;
  for (int k = 2; k <= n; ++k) r *= q_integer(k, d);
  return r;
}

Scalar q_binomial(int n, int k, int d) {
  if (k < 0 || k > n) return {};
  return q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d));
}

}  // namespace uqa
