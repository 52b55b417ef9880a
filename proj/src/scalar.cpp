#include "gorenstein/scalar.hpp"

#include <charconv>
#include <ostream>

namespace gorenstein {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_set_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::string digits;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : s) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    }
    digits.push_back(ch);
  }
  mpz_class v(digits, 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("field modulus must be an odd prime below 2^62");
  }
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "', expected Q or Fp:<p>");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(mpz_class(value), field.modulus()), field.modulus()};
  }
}

Scalar::Scalar(const Field& field, const mpz_class& value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(value, field.modulus()), field.modulus()};
  }
}

Scalar::Scalar(mpq_class value) {
  value.canonicalize();
  value_ = std::move(value);
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1)
                                                  : parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  if (field.is_rational()) return Scalar(mpq_class(num, den));
  return Scalar(field, num) / Scalar(field, den);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::rational() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  if (q == nullptr) throw std::logic_error("rational() called on a prime-field scalar");
  return *q;
}

std::uint64_t Scalar::residue() const {
  const auto* r = std::get_if<Residue>(&value_);
  if (r == nullptr) throw std::logic_error("residue() called on a rational scalar");
  return r->value;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index()) {
    throw FieldMismatch("operands come from different fields");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(rhs.value_).modulus) {
      throw FieldMismatch("operands come from prime fields of different characteristic");
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class inv = 1 / *q;
    inv.canonicalize();
    return Scalar(std::move(inv));
  }
  const auto& r = std::get<Residue>(value_);
  // Fermat: a^(p-2).
  std::uint64_t base = r.value;
  std::uint64_t exp = r.modulus - 2;
  std::uint64_t acc = 1;
  while (exp != 0) {
    if (exp & 1U) acc = mul_mod(acc, base, r.modulus);
    base = mul_mod(base, base, r.modulus);
    exp >>= 1U;
  }
  return Scalar(Residue{acc, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = r.value + std::get<Residue>(rhs.value_).value;
    r.value = s >= r.modulus ? s - r.modulus : s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t b = std::get<Residue>(rhs.value_).value;
    r.value = r.value >= b ? r.value - b : r.value + r.modulus - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = mul_mod(r.value, std::get<Residue>(rhs.value_).value, r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  return lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar binomial(const Field& field, unsigned n, unsigned k) {
  if (k > n) return Scalar::zero(field);
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return Scalar(field, v);
}

Scalar multinomial(const Field& field, unsigned n, unsigned a, unsigned b, unsigned c) {
  if (a + b + c != n) {
    throw std::invalid_argument("multinomial: exponents must sum to n");
  }
  mpz_class ab;
  mpz_class n_choose_c;
  mpz_bin_uiui(ab.get_mpz_t(), a + b, a);
  mpz_bin_uiui(n_choose_c.get_mpz_t(), n, c);
  return Scalar(field, mpz_class(ab * n_choose_c));
}

}  // namespace gorenstein
