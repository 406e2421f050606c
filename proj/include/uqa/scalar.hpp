#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqa {

/// Dense univariate polynomial in q with integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients; otherwise the top
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpz_class> coeffs);
  static Poly constant(const mpz_class& c);
  static Poly monomial(const mpz_class& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const { return c_.back(); }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }

  /// Number of trailing zero coefficients at the low end (valuation at q = 0).
  std::size_t low_order() const;
  Poly shifted_down(std::size_t k) const;
  Poly shifted_up(std::size_t k) const;

  mpz_class content() const;
  Poly primitive_part() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpz_class& c) const;
  /// Exact division by an integer that divides every coefficient.
  Poly divided_exact(const mpz_class& c) const;

  /// Exact quotient a / b; throws if b does not divide a over Z.
  static Poly divide_exact(const Poly& a, const Poly& b);
  /// Pseudo-remainder of a by b.
  static Poly pseudo_remainder(const Poly& a, const Poly& b);
  /// Primitive gcd with positive leading coefficient (primitive PRS).
  static Poly gcd(const Poly& a, const Poly& b);

  mpq_class evaluate(const mpq_class& x) const;

  bool operator==(const Poly&) const = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Element of Q(q) in canonical form
///
///     content * q^unit_exponent * numerator(q) / denominator(q)
///
/// where numerator and denominator are primitive integer polynomials with
/// positive leading coefficients, nonzero constant terms and no common factor.
/// Zero has content 0, numerator 0, denominator 1 and unit exponent 0, so two
/// Scalars are equal exactly when their fields are equal.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::constant(1)) {}
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& c);

  /// Canonical form of num / den.
  static Scalar normalize(const Poly& num, const Poly& den);
  /// c * q^k
  static Scalar q_power(int k, const mpq_class& c = 1);
  /// Laurent polynomial sum_k coeffs[k] q^(low + k).
  static Scalar laurent(int low, const std::vector<mpz_class>& coeffs);

  bool is_zero() const { return content_ == 0; }
  bool is_one() const;
  const mpq_class& content() const { return content_; }
  int unit_exponent() const { return exp_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.degree() == 0; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inverse() const;
  Scalar pow(int k) const;

  /// Value at q = q0. Throws DivisionByZero at a pole.
  mpq_class evaluate_at(const mpq_class& q0) const;

  bool operator==(const Scalar& o) const {
    return exp_ == o.exp_ && content_ == o.content_ && num_ == o.num_ &&
           den_ == o.den_;
  }

  /// Canonical text form, re-parseable by parse_scalar.
  std::string to_string() const;

 private:
  Scalar(mpq_class content, int exp, Poly num, Poly den)
      : content_(std::move(content)),
        exp_(exp),
        num_(std::move(num)),
        den_(std::move(den)) {}
  static Scalar make(mpq_class content, long exp, Poly num, Poly den);

  mpq_class content_{0};
  int exp_ = 0;
  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Symmetric q-number [n]_{q^d} = (q^{nd} - q^{-nd}) / (q^d - q^{-d}).
Scalar q_integer(int n, int d);
/// q-factorial [n]_{q^d}!
Scalar q_factorial(int n, int d);
/// q-binomial [n choose k]_{q^d}.
Scalar q_binomial(int n, int k, int d);

}  // namespace uqa
