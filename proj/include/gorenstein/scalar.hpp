#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace gorenstein {

/// Thrown when two values from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultPrime = 32003;

/// The ground field: either Q or Z/p for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is an odd prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  /// Zero for Q.
  std::uint64_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field residues lie in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  /// Rational only; canonicalizes its argument.
  explicit Scalar(mpq_class value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// "num", "num/den", optionally signed. Prime fields reduce the result.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Valid only for rational scalars.
  const mpq_class& rational() const;
  /// Valid only for prime-field scalars.
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// "num/den" or "num" for rationals, the decimal residue for Z/p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// C(n, k) embedded in the field; zero when k > n.
Scalar binomial(const Field& field, unsigned n, unsigned k);
/// n! / (a! b! c!) embedded in the field. Requires a + b + c == n.
Scalar multinomial(const Field& field, unsigned n, unsigned a, unsigned b,
                   unsigned c);

}  // namespace gorenstein
