#include "gorenstein/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gorenstein {

bool precedes(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.a != rhs.a) return rhs.a < lhs.a;
  return rhs.b < lhs.b;
}

Monomial monomial_at(int degree, std::size_t index) {
  if (degree < 0 || index >= basis_size(degree)) {
    throw std::out_of_range("monomial index out of range");
  }
  // index = rest(rest+1)/2 + (rest - b) with rest = degree - a.
  std::size_t rest = 0;
  while ((rest + 1) * (rest + 2) / 2 <= index) ++rest;
  const std::size_t offset = index - rest * (rest + 1) / 2;
  Monomial m;
  m.a = degree - static_cast<int>(rest);
  m.b = static_cast<int>(rest - offset);
  m.c = static_cast<int>(offset);
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  auto put = [&out](char var, int e) {
    if (e == 0) return;
    out.push_back(var);
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('x', m.a);
  put('y', m.b);
  put('z', m.c);
  return out;
}

std::string exponent_key(const Monomial& m) {
  return std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c);
}

Monomial parse_exponent_key(const std::string& key) {
  std::istringstream in(key);
  Monomial m;
  char comma1 = 0;
  char comma2 = 0;
  if (!(in >> m.a >> comma1 >> m.b >> comma2 >> m.c) || comma1 != ',' || comma2 != ',' ||
      !m.is_valid()) {
    throw std::invalid_argument("malformed exponent key '" + key + "'");
  }
  in >> std::ws;
  if (!in.eof()) throw std::invalid_argument("malformed exponent key '" + key + "'");
  return m;
}

std::vector<Monomial> sym_basis(int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  out.reserve(basis_size(degree));
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

std::vector<Monomial> sym_basis_u0(int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (int b = degree; b >= 0; --b) out.push_back({0, b, degree - b});
  return out;
}

BasisIndex enumerate_basis(Space space, int degree) {
  if (degree < 0) throw std::invalid_argument("basis degree must be nonnegative");
  BasisIndex idx;
  idx.space = space;
  idx.degree = degree;
  const bool full = space == Space::SymU || space == Space::DualU;
  idx.monomials = full ? sym_basis(degree) : sym_basis_u0(degree);
  return idx;
}

}  // namespace gorenstein
