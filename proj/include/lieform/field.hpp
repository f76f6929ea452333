#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields GF(p).
//
// Every element type K exposes `K::field_type`, a small value describing the
// field it lives in (zero/one/parse/spec). Algorithms elsewhere in the library
// are templated on K and obtain constants through the field object.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "lieform/errors.hpp"

namespace lieform {

/// Runtime descriptor of a field: "Q" or "GF(p)".
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec parse(std::string_view text);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string to_string() const {
    return kind == Kind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
  }
  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > UINT32_MAX) throw ParseError("prime modulus must fit in 32 bits: " + std::to_string(p));
  if (!is_prime(p)) throw ParseError("not a prime: " + std::to_string(p));
  return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw ParseError("unrecognised field descriptor: '" + std::string(text) + "'");
}

namespace detail {

struct ScalarText {
  bool negative = false;
  std::string_view numerator;
  std::string_view denominator;  // empty when absent
};

// Grammar: -?[0-9]+(/[1-9][0-9]*)?
inline ScalarText split_scalar(std::string_view text) {
  ScalarText out;
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '-') {
    out.negative = true;
    rest.remove_prefix(1);
  }
  auto slash = rest.find('/');
  out.numerator = rest.substr(0, slash);
  if (slash != std::string_view::npos) out.denominator = rest.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool ok = all_digits(out.numerator);
  if (slash != std::string_view::npos)
    ok = ok && all_digits(out.denominator) && out.denominator.front() != '0';
  if (!ok) throw ParseError("malformed scalar: '" + std::string(text) + "'");
  return out;
}

}  // namespace detail

class RationalField;
class PrimeField;

/// Element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  using field_type = RationalField;
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(value_type v) : v_(std::move(v)) {}
  explicit Rational(long long n) : v_(n) {}

  const value_type& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(value_type(1) / v_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    auto num = boost::multiprecision::numerator(v_);
    auto den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

 private:
  value_type v_;
};

/// Element of GF(p). Carries its modulus so that arithmetic between elements of
/// different prime fields is detected. A default-constructed value has modulus 0
/// and is only a placeholder; any arithmetic on it raises FieldMismatch.
class ModP {
 public:
  using field_type = PrimeField;

  ModP() = default;
  ModP(std::uint64_t residue, std::uint32_t p)
      : value_(static_cast<std::uint32_t>(residue % p)), p_(p) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  ModP operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint64_t s = std::uint64_t(value_) + o.value_;
    value_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_
                                : static_cast<std::uint32_t>(std::uint64_t(value_) + p_ - o.value_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint32_t>(std::uint64_t(value_) * o.value_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    check(o);
    return *this *= o.inverse();
  }

  ModP inverse() const {
    if (p_ == 0) throw FieldMismatch();
    if (value_ == 0) throw DivisionByZero();
    // extended Euclid on (value, p)
    std::int64_t r0 = p_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return raw(static_cast<std::uint32_t>(t0), p_);
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    a.check(b);
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ModP& a, const ModP& b) {
    a.check(b);
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP m;
    m.value_ = v;
    m.p_ = p;
    return m;
  }
  void check(const ModP& o) const {
    if (p_ != o.p_ || p_ == 0) throw FieldMismatch();
  }

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

class RationalField {
 public:
  using element_type = Rational;
  static constexpr bool is_finite = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Rational parse(std::string_view text) const {
    auto parts = detail::split_scalar(text);
    Rational::value_type num(std::string(parts.numerator));
    Rational::value_type den(1);
    if (!parts.denominator.empty()) den = Rational::value_type(std::string(parts.denominator));
    Rational::value_type v = num / den;
    return Rational(parts.negative ? Rational::value_type(-v) : v);
  }

  bool operator==(const RationalField&) const = default;
};

class PrimeField {
 public:
  using element_type = ModP;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).p) {}

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return ModP(static_cast<std::uint64_t>(r), p_);
  }
  /// The element with residue `index`, for enumeration (0 <= index < p).
  ModP element(std::uint64_t index) const { return ModP(index, p_); }
  FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p_}; }

  ModP parse(std::string_view text) const {
    auto parts = detail::split_scalar(text);
    ModP num = reduce(parts.numerator);
    if (parts.negative) num = -num;
    if (parts.denominator.empty()) return num;
    ModP den = reduce(parts.denominator);
    if (den.is_zero()) throw DivisionByZero();
    return num / den;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  ModP reduce(std::string_view digits) const {
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + std::uint64_t(c - '0')) % p_;
    return ModP(r, p_);
  }

  std::uint32_t p_;
};

template <class K>
concept FieldElement = requires(const K& a, const K& b, const typename K::field_type& f) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { f.zero() } -> std::same_as<K>;
  { f.one() } -> std::same_as<K>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

template <class K>
using field_of = typename K::field_type;

template <class K>
inline constexpr bool is_finite_field_v = field_of<K>::is_finite;

static_assert(FieldElement<Rational>);
static_assert(FieldElement<ModP>);

}  // namespace lieform
