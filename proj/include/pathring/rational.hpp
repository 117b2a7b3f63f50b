#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "pathring/errors.hpp"

namespace pathring {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator, so equality is structural and `str()` is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw ParseError("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q", and finite decimals such as "-0.125" or "2.5e-3".
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
    if (s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos) {
      return parse_decimal(s);
    }
    mpq_class q;
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
      std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (i == part.size()) throw bad();
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') throw bad();
    };
    if (slash == std::string::npos) {
      check_int(s);
    } else {
      check_int(s.substr(0, slash));
      std::string den = s.substr(slash + 1);
      check_int(den);
      if (den[0] == '-' || den[0] == '+') throw bad();
    }
    std::string clean = (s[0] == '+') ? s.substr(1) : s;
    if (q.set_str(clean, 10) != 0) throw bad();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational parse_decimal(const std::string& s) {
    auto bad = [&] { return ParseError("malformed decimal '" + s + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
      if (s[i] == '.') {
        if (seen_dot) throw bad();
        seen_dot = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        digits.push_back(s[i]);
        if (seen_dot) ++frac_digits;
      } else {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    long exponent = 0;
    if (i < s.size()) {
      std::string e = s.substr(i + 1);
      if (e.empty()) throw bad();
      std::size_t used = 0;
      try {
        exponent = std::stol(e, &used);
      } catch (const std::exception&) {
        throw bad();
      }
      if (used != e.size()) throw bad();
    }
    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    long shift = exponent - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class q = shift >= 0 ? mpq_class(mant * pow10) : mpq_class(mant, pow10);
    return Rational(std::move(q));
  }

  mpq_class q_{0};
};

}  // namespace pathring
