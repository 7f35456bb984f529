#pragma once

// Exact rational numbers.
//
// A Rat keeps numerator and denominator in two machine words while they fit
// and switches to arbitrary-precision integers otherwise, so every operation
// is exact and nothing overflows silently. Values are always in lowest terms
// with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glnrep {

using BigInt = boost::multiprecision::cpp_int;

class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value) : num_(checked_small(value)) {}  // NOLINT: implicit by intent
  Rat(int value) : num_(value) {}                          // NOLINT
  Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    checked_small(num);
    checked_small(den);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = gcd64(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  Rat(BigInt num, BigInt den) { assign(std::move(num), std::move(den)); }

  // Accepts "p/q", "p", with optional sign and surrounding whitespace.
  static Rat parse(std::string_view text);

  BigInt num() const { return big_ ? big_->num : BigInt(num_); }
  BigInt den() const { return big_ ? big_->den : BigInt(den_); }

  bool is_integer() const { return big_ ? big_->den == 1 : den_ == 1; }
  int sign() const {
    if (big_) return big_->num.sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return sign() == 0; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat square() const { return *this * *this; }
  Rat reciprocal() const;

  // "p/q", or "p" for integers.
  std::string str() const;
  // Rounded half away from zero to `digits` places after the point.
  std::string decimal(int digits = 12) const;

  friend Rat operator-(const Rat& x);
  friend Rat operator+(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
  friend Rat operator*(const Rat& x, const Rat& y);
  friend Rat operator/(const Rat& x, const Rat& y) { return x * y.reciprocal(); }

  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  friend bool operator==(const Rat& x, const Rat& y);
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

 private:
  struct Big {
    BigInt num;
    BigInt den;
  };

  // The small range excludes INT64_MIN so negation never overflows.
  static constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

  static std::int64_t checked_small(std::int64_t v) {
    if (v == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("Rat: INT64_MIN is outside the supported integer range");
    }
    return v;
  }

  static bool fits_small(__int128 v) { return v <= kSmallMax && v >= -kSmallMax; }
  static bool fits_small(const BigInt& v) { return v <= kSmallMax && v >= -kSmallMax; }

  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                                              static_cast<std::uint64_t>(b < 0 ? -b : b)));
  }

  // num/den already reduced, den > 0.
  void set_reduced(__int128 num, __int128 den) {
    if (fits_small(num) && fits_small(den)) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      big_.reset();
    } else {
      set_reduced(to_big(num), to_big(den));
    }
  }

  void set_reduced(BigInt num, BigInt den) {
    if (fits_small(num) && fits_small(den)) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      big_.reset();
    } else {
      big_ = std::make_shared<const Big>(Big{std::move(num), std::move(den)});
      num_ = 0;
      den_ = 1;
    }
  }

  void assign(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    set_reduced(std::move(num), std::move(den));
  }

  static BigInt to_big(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt r = (hi << 64) + static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

inline Rat Rat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("not a rational number");
    BigInt v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("not a rational number");
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text), BigInt(1));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rat(parse_int(text.substr(0, slash)), std::move(den));
}

inline Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rat: division by zero");
  Rat r;
  if (big_) {
    r.assign(big_->den, big_->num);
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

inline Rat operator-(const Rat& x) {
  Rat r;
  if (x.big_) {
    r.set_reduced(BigInt(-x.big_->num), x.big_->den);
  } else {
    r.num_ = -x.num_;
    r.den_ = x.den_;
  }
  return r;
}

inline Rat operator+(const Rat& x, const Rat& y) {
  Rat r;
  if (x.big_ || y.big_) {
    r.assign(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
    return r;
  }
  if (x.den_ == 1 && y.den_ == 1) {
    r.set_reduced(static_cast<__int128>(x.num_) + y.num_, __int128{1});
    return r;
  }
  // Knuth 4.5.1: reduce by gcd of the denominators first.
  std::int64_t g = Rat::gcd64(x.den_, y.den_);
  std::int64_t xd = x.den_ / g;
  std::int64_t yd = y.den_ / g;
  __int128 num = static_cast<__int128>(x.num_) * yd + static_cast<__int128>(y.num_) * xd;
  __int128 den = static_cast<__int128>(x.den_) * yd;
  if (g != 1 && num != 0) {
    std::int64_t g2 = Rat::gcd64(static_cast<std::int64_t>(num % g), g);
    if (g2 > 1) {
      num /= g2;
      den /= g2;
    }
  } else if (num == 0) {
    den = 1;
  }
  r.set_reduced(num, den);
  return r;
}

inline Rat operator*(const Rat& x, const Rat& y) {
  Rat r;
  if (x.big_ || y.big_) {
    r.assign(x.num() * y.num(), x.den() * y.den());
    return r;
  }
  if (x.num_ == 0 || y.num_ == 0) return r;
  std::int64_t g1 = Rat::gcd64(x.num_, y.den_);
  std::int64_t g2 = Rat::gcd64(y.num_, x.den_);
  __int128 num = static_cast<__int128>(x.num_ / g1) * (y.num_ / g2);
  __int128 den = static_cast<__int128>(x.den_ / g2) * (y.den_ / g1);
  r.set_reduced(num, den);
  return r;
}

inline bool operator==(const Rat& x, const Rat& y) {
  if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
  // Representations are canonical: a big value never equals a small one.
  if (static_cast<bool>(x.big_) != static_cast<bool>(y.big_)) return false;
  return x.big_->num == y.big_->num && x.big_->den == y.big_->den;
}

inline std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
  if (!x.big_ && !y.big_) {
    __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    return lhs <=> rhs;
  }
  BigInt lhs = x.num() * y.den();
  BigInt rhs = y.num() * x.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::string Rat::str() const {
  if (big_) {
    std::string s = big_->num.str();
    if (big_->den != 1) s += "/" + big_->den.str();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

namespace detail {

inline BigInt pow10(int digits) {
  BigInt p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

// Renders `scaled / 10^digits` where `scaled` is a non-negative integer.
inline std::string render_fixed(const BigInt& scaled, int digits, bool negative) {
  BigInt p = pow10(digits);
  BigInt whole = scaled / p;
  std::string frac = BigInt(scaled % p).str();
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  return out;
}

}  // namespace detail

inline std::string Rat::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("Rat::decimal: negative digit count");
  BigInt n = num();
  bool negative = n < 0;
  if (negative) n = -n;
  // floor(10 * |x| * 10^digits), then round the last digit half-up.
  BigInt scaled = (n * detail::pow10(digits + 1)) / den();
  scaled = (scaled + 5) / 10;
  return detail::render_fixed(scaled, digits, negative);
}

// Decimal rendering of sqrt(x) for x >= 0, rounded half-up, computed with
// integer square roots only.
inline std::string decimal_sqrt(const Rat& x, int digits = 12) {
  if (x.sign() < 0) throw std::domain_error("decimal_sqrt: negative argument");
  // floor(sqrt(x) * 10^(digits+1)) == isqrt(floor(x * 10^(2 digits + 2))).
  BigInt scaled = (x.num() * detail::pow10(2 * digits + 2)) / x.den();
  BigInt root = boost::multiprecision::sqrt(scaled);
  root = (root + 5) / 10;
  return detail::render_fixed(root, digits, false);
}

}  // namespace glnrep
