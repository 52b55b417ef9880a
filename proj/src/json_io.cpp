#include "gorenstein/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gorenstein {

namespace {

mpz_class lcm_of_denominators(const std::vector<const Scalar*>& values) {
  mpz_class out = 1;
  for (const Scalar* s : values) {
    if (s->field().is_rational()) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), s->rational().get_den_mpz_t());
  }
  return out;
}

std::vector<const Scalar*> all_coefficients(const PolyMatrix& m) {
  std::vector<const Scalar*> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& c : m(i, j).coefficients()) out.push_back(&c);
    }
  }
  return out;
}

Scalar scale_for(const Field& field, const mpz_class& lcm) {
  if (!field.is_rational()) return Scalar::one(field);
  return Scalar(mpq_class(lcm));
}

Json shape_json(const BettiShape& shape) {
  Json out = Json::array();
  for (const auto& [degree, rank] : shape) out.push_back({degree, rank});
  return out;
}

Json matrix_json(const FieldMatrix& m, const ReportOptions& options) {
  return options.clear_denominators ? cleared_json(m) : to_json(m);
}

Json matrix_json(const PolyMatrix& m, const ReportOptions& options) {
  return options.clear_denominators ? cleared_json(m) : to_json(m);
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const DualElement& w) {
  Json coeffs = Json::object();
  w.for_each_term([&coeffs](const Monomial& m, const Scalar& c) {
    coeffs[exponent_key(m)] = c.to_string();
  });
  return Json{{"field", w.field().to_string()}, {"degree", w.degree()}, {"coeffs", coeffs}};
}

DualElement dual_from_json(const Json& j) {
  const Field field = Field::parse(require_key(j, "field").get<std::string>());
  const Json& degree = require_key(j, "degree");
  if (!degree.is_number_integer() || degree.get<int>() < 0) {
    throw std::invalid_argument("degree must be a nonnegative integer");
  }
  DualElement out(field, degree.get<int>());
  const Json& coeffs = require_key(j, "coeffs");
  if (!coeffs.is_object()) throw std::invalid_argument("coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    const Monomial m = parse_exponent_key(key);
    if (!value.is_string()) throw std::invalid_argument("coefficient of " + key + " is not a string");
    out.set_coefficient(m, Scalar::parse(field, value.get<std::string>()));
  }
  return out;
}

Json to_json(const FieldMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

FieldMatrix field_matrix_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    rows.push_back(row.get<std::vector<std::string>>());
  }
  return make_matrix(field, rows);
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

PolyMatrix poly_matrix_from_json(const Field& field, int degree, const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw std::invalid_argument("polynomial matrix must be a nonempty array of rows");
  }
  PolyMatrix out(j.size(), j.front().size(), field, degree);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != out.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < out.cols(); ++k) {
      out.set(i, k, parse_polynomial(field, j[i][k].get<std::string>(), degree));
    }
  }
  return out;
}

Json to_json(const std::vector<Polynomial>& row) {
  Json out = Json::array();
  for (const auto& p : row) out.push_back(to_string(p));
  return out;
}

Json cleared_json(const FieldMatrix& m) {
  std::vector<const Scalar*> values;
  for (const auto& s : m.data()) values.push_back(&s);
  const mpz_class lcm = lcm_of_denominators(values);
  const Field field = m.empty() ? Field::rationals() : m(0, 0).field();
  const Scalar scale = scale_for(field, lcm);
  return Json{{"factor", scale.inverse().to_string()}, {"entries", to_json(scale * m)}};
}

Json cleared_json(const PolyMatrix& m) {
  const mpz_class lcm = lcm_of_denominators(all_coefficients(m));
  const Scalar scale = scale_for(m.field(), lcm);
  return Json{{"factor", scale.inverse().to_string()}, {"entries", to_json(scale * m)}};
}

std::string status_name(QuadraticStatus status) {
  switch (status) {
    case QuadraticStatus::Presented: return "presented";
    case QuadraticStatus::OddN: return "odd_n";
    case QuadraticStatus::SingularAPrime: return "singular_a_prime";
  }
  return "unknown";
}

Json to_json(const LinearPresentation& lin, const ReportOptions& options) {
  Json out;
  out["linearly_presented"] = lin.linearly_presented;
  out["p_rank"] = lin.p_rank;
  out["p"] = matrix_json(lin.p, options);
  out["r"] = matrix_json(lin.r, options);
  if (!lin.linearly_presented) return out;
  out["p_inverse"] = matrix_json(lin.p_inverse, options);
  out["a0"] = matrix_json(lin.a0, options);
  out["a_prime"] = matrix_json(lin.a_prime, options);
  out["b0"] = matrix_json(lin.b0, options);
  out["b1"] = matrix_json(lin.b1, options);
  out["b2"] = matrix_json(lin.b2, options);
  out["d0"] = matrix_json(lin.d0, options);
  out["a"] = matrix_json(lin.a, options);
  out["b"] = matrix_json(lin.b, options);
  out["d"] = matrix_json(lin.d, options);
  out["syzygies"] = matrix_json(lin.syzygies, options);
  out["generators"] = to_json(lin.generators);
  out["explicit_generators"] = to_json(lin.explicit_generators);
  out["unit"] = proportionality_unit(lin.explicit_generators, lin.generators).to_string();
  out["betti_shape"] = shape_json(linear_betti_shape(lin.n));
  return out;
}

Json to_json(const QuadraticPresentation& quad, const ReportOptions& options) {
  Json out;
  out["status"] = status_name(quad.status);
  out["quadratically_presented"] = quad.quadratically_presented();
  out["a_prime_rank"] = quad.a_prime_rank;
  out["hypotheses_checked"] = quad.hypotheses_checked;
  if (quad.status == QuadraticStatus::OddN) {
    out["diagnosis"] = "n odd: the alternating matrix a_prime is necessarily singular";
  } else if (quad.status == QuadraticStatus::SingularAPrime) {
    out["diagnosis"] = quad.hypotheses_checked
                           ? "a_prime singular: J is not quadratically presented"
                           : "a_prime singular; hypotheses not checked, so no conclusion about J";
  }
  if (!quad.quadratically_presented()) return out;
  out["syzygies"] = matrix_json(quad.syzygies, options);
  out["generators"] = to_json(quad.generators);
  out["explicit_generators"] = to_json(quad.explicit_generators);
  out["unit"] = quad.unit->to_string();
  out["betti_shape"] = shape_json(quadratic_betti_shape(quad.n));
  return out;
}

Json resolution_report(const LinearPresentation& lin, const std::optional<QuadraticPresentation>& quad,
                       const ReportOptions& options) {
  Json out;
  out["n"] = lin.n;
  out["field"] = lin.field.to_string();
  out["linear"] = to_json(lin, options);
  if (quad) out["quadratic"] = to_json(*quad, options);
  return out;
}

Json to_json(const GradedIdealSummary& summary, bool include_bases) {
  Json out;
  out["socle_degree"] = summary.socle_degree;
  Json degrees = Json::array();
  Json ideal = Json::array();
  Json hilbert = Json::array();
  Json generators = Json::array();
  for (const auto& d : summary.degrees) {
    degrees.push_back(d.degree);
    ideal.push_back(d.ideal_dim);
    hilbert.push_back(d.quotient_dim);
    generators.push_back(d.min_generators);
  }
  out["degrees"] = degrees;
  out["ideal_dim"] = ideal;
  out["quotient_dim"] = hilbert;
  out["min_generators"] = generators;
  out["hilbert_function"] = summary.hilbert_function();
  out["hilbert_symmetric"] = summary.hilbert_symmetric;
  if (include_bases) {
    Json bases = Json::array();
    for (const auto& d : summary.degrees) bases.push_back(to_json(d.kernel_basis));
    out["kernel_bases"] = bases;
  }
  return out;
}

Json to_json(const LefschetzReport& report) {
  Json out;
  out["ell"] = to_string(report.ell);
  out["matrix"] = to_json(report.m);
  out["determinant"] = report.determinant.to_string();
  out["lefschetz"] = report.lefschetz;
  out["note"] = report.note;
  return out;
}

DualElement read_dual_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return dual_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace gorenstein
