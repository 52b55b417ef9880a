#include "gorenstein/forms.hpp"

#include <cctype>

#include "gorenstein/linalg.hpp"

namespace gorenstein {

Polynomial operator*(const Polynomial& u, const Polynomial& v) {
  if (u.field() != v.field()) throw FieldMismatch("polynomials over different fields");
  Polynomial out(u.field(), u.degree() + v.degree());
  u.for_each_term([&](const Monomial& mu, const Scalar& cu) {
    v.for_each_term([&](const Monomial& mv, const Scalar& cv) {
      out.coefficient_at(basis_index(mu * mv)) += cu * cv;
    });
  });
  return out;
}

Polynomial power(const Polynomial& u, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Polynomial out = Polynomial::constant(Scalar::one(u.field()));
  for (int i = 0; i < exponent; ++i) out = out * u;
  return out;
}

Polynomial linear_form(const Scalar& cx, const Scalar& cy, const Scalar& cz) {
  Polynomial out(cx.field(), 1);
  out.set_coefficient({1, 0, 0}, cx);
  out.set_coefficient({0, 1, 0}, cy);
  out.set_coefficient({0, 0, 1}, cz);
  return out;
}

Polynomial variable(const Field& field, int index) {
  if (index < 0 || index > 2) throw std::out_of_range("variable index must be 0, 1 or 2");
  Monomial m;
  (index == 0 ? m.a : index == 1 ? m.b : m.c) = 1;
  return Polynomial::monomial(field, m);
}

DualElement contract(const Polynomial& u, const DualElement& w) {
  if (u.field() != w.field()) throw FieldMismatch("contract: operands over different fields");
  if (u.degree() > w.degree()) {
    throw std::invalid_argument("contract: degree " + std::to_string(u.degree()) +
                                " acting on degree " + std::to_string(w.degree()));
  }
  const int out_degree = w.degree() - u.degree();
  DualElement out(w.field(), out_degree);
  const auto targets = sym_basis(out_degree);
  u.for_each_term([&](const Monomial& mu, const Scalar& cu) {
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const Scalar& cw = w.coefficient_at(basis_index(mu * targets[k]));
      if (!cw.is_zero()) out.coefficient_at(k) += cu * cw;
    }
  });
  return out;
}

Scalar evaluate(const DualElement& w, const Polynomial& u) {
  if (u.field() != w.field()) throw FieldMismatch("evaluate: operands over different fields");
  if (u.degree() != w.degree()) {
    throw std::invalid_argument("evaluate: degree " + std::to_string(w.degree()) +
                                " functional on degree " + std::to_string(u.degree()));
  }
  Scalar acc = Scalar::zero(w.field());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Scalar& cu = u.coefficient_at(i);
    if (!cu.is_zero()) acc += cu * w.coefficient_at(i);
  }
  return acc;
}

namespace {

void require_change_of_variables(const FieldMatrix& g) {
  if (g.rows() != 3 || g.cols() != 3) {
    throw std::invalid_argument("change of variables must be a 3x3 matrix");
  }
  if (determinant(g).is_zero()) throw std::invalid_argument("change of variables is singular");
}

std::vector<Polynomial> variable_images(const FieldMatrix& g) {
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < 3; ++k) images.push_back(linear_form(g(0, k), g(1, k), g(2, k)));
  return images;
}

}  // namespace

Polynomial apply_change_of_variables(const FieldMatrix& g, const Polynomial& u) {
  if (g.rows() != 3 || g.cols() != 3) {
    throw std::invalid_argument("change of variables must be a 3x3 matrix");
  }
  const auto images = variable_images(g);
  Polynomial out(u.field(), u.degree());
  u.for_each_term([&](const Monomial& m, const Scalar& c) {
    out += c * (power(images[0], m.a) * power(images[1], m.b) * power(images[2], m.c));
  });
  return out;
}

DualElement substitute(const DualElement& w, const FieldMatrix& g) {
  require_change_of_variables(g);
  const Field& field = w.field();
  const int d = w.degree();
  const auto images = variable_images(g);
  // powers[k][e] = images[k]^e
  std::vector<std::vector<Polynomial>> powers(3);
  for (std::size_t k = 0; k < 3; ++k) {
    powers[k].push_back(Polynomial::constant(Scalar::one(field)));
    for (int e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * images[k]);
  }
  DualElement out(field, d);
  const auto basis = sym_basis(d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& m = basis[i];
    out.coefficient_at(i) = evaluate(w, powers[0][m.a] * powers[1][m.b] * powers[2][m.c]);
  }
  return out;
}

std::string to_string(const Polynomial& u) {
  std::string out;
  u.for_each_term([&out](const Monomial& m, const Scalar& c) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (m.degree() > 0) out += to_string(m);
  });
  return out.empty() ? std::string("0") : out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const Field& field, const std::string& text) : field_(field) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  std::vector<std::pair<Monomial, Scalar>> parse_terms() {
    std::vector<std::pair<Monomial, Scalar>> terms;
    if (src_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < src_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Scalar coeff = parse_coefficient();
      Monomial m = parse_monomial();
      if (negative) coeff = -coeff;
      terms.emplace_back(m, coeff);
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + src_ + "': " + what);
  }

  Scalar parse_coefficient() {
    if (peek() == '(') {
      auto close = src_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      Scalar c = Scalar::parse(field_, src_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      if (peek() == '*') ++pos_;
      return c;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/' && start != pos_) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (start == pos_) return Scalar::one(field_);
    Scalar c = Scalar::parse(field_, src_.substr(start, pos_ - start));
    if (peek() == '*') ++pos_;
    return c;
  }

  Monomial parse_monomial() {
    Monomial m;
    while (peek() == 'x' || peek() == 'y' || peek() == 'z') {
      char var = src_[pos_++];
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("missing exponent");
        e = std::stoi(src_.substr(start, pos_ - start));
      }
      (var == 'x' ? m.a : var == 'y' ? m.b : m.c) += e;
      if (peek() == '*') ++pos_;
    }
    if (pos_ < src_.size() && peek() != '+' && peek() != '-') {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return m;
  }

  Field field_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Field& field, const std::string& text, int degree) {
  auto terms = PolynomialParser(field, text).parse_terms();
  int d = degree;
  for (const auto& [m, c] : terms) {
    if (c.is_zero()) continue;
    if (d < 0) d = m.degree();
    if (m.degree() != d) {
      throw std::invalid_argument("polynomial '" + text + "' is not homogeneous of degree " +
                                  std::to_string(d));
    }
  }
  Polynomial out(field, d < 0 ? 0 : d);
  for (const auto& [m, c] : terms) {
    if (!c.is_zero()) out.add_to(m, c);
  }
  return out;
}

}  // namespace gorenstein
