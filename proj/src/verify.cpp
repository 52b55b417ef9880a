#include "gorenstein/verify.hpp"

#include <sstream>

#include "gorenstein/oracle.hpp"
#include "gorenstein/pfaffian.hpp"

namespace gorenstein {

namespace {

class Recorder {
 public:
  void pass(std::string name, std::string detail = {}) {
    add(std::move(name), CheckOutcome::Pass, std::move(detail));
  }
  void fail(std::string name, std::string detail) {
    add(std::move(name), CheckOutcome::Fail, std::move(detail));
  }
  void skip(std::string name, std::string detail) {
    add(std::move(name), CheckOutcome::Skip, std::move(detail));
  }
  void check(std::string name, bool ok, std::string fail_detail = {}) {
    add(std::move(name), ok ? CheckOutcome::Pass : CheckOutcome::Fail, ok ? "" : std::move(fail_detail));
  }
  // Runs f; an exception counts as a failure of that check.
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      fail(name, e.what());
    }
  }
  VerificationReport done() { return std::move(report_); }

 private:
  void add(std::string name, CheckOutcome outcome, std::string detail) {
    report_.checks.push_back({std::move(name), outcome, std::move(detail)});
  }
  VerificationReport report_;
};

bool all_of_degree(const std::vector<Polynomial>& row, int degree) {
  for (const auto& p : row) {
    if (p.degree() != degree) return false;
  }
  return true;
}

std::string comparison_detail(const IdealComparison& cmp) {
  for (const auto& d : cmp.degrees) {
    if (!d.equal()) {
      return "degree " + std::to_string(d.degree) + ": generated " +
             std::to_string(d.generated_dim) + ", annihilator " +
             std::to_string(d.annihilator_dim) + (d.contained ? "" : ", not contained");
    }
  }
  return {};
}

void linear_checks(Recorder& rec, const DualElement& phi, const LinearPresentation& lin) {
  const int n = lin.n;
  rec.check("linear: alternating", is_alternating(lin.syzygies));
  rec.check("linear: homogeneity",
            lin.syzygies.degree() == 1 && lin.syzygies.is_homogeneous() &&
                all_of_degree(lin.generators, n),
            "entries of the wrong degree");
  rec.guarded("linear: generators * syzygies = 0", [&] {
    const auto row = PolyMatrix::row(lin.field, n, lin.generators);
    rec.check("linear: generators * syzygies = 0", (row * lin.syzygies).is_zero(),
              "nonzero product");
  });
  rec.guarded("linear: explicit generators proportional", [&] {
    const Scalar u = proportionality_unit(lin.explicit_generators, lin.generators);
    rec.pass("linear: explicit generators proportional", "unit " + u.to_string());
  });
  rec.guarded("linear: reduction conjugation", [&] {
    const DualElement reduced = reduced_inverse_system(phi);
    const auto lin_reduced = build_linear_presentation(reduced, n);
    if (!lin_reduced.linearly_presented) {
      rec.fail("linear: reduction conjugation", "reduced system not linearly presented");
      return;
    }
    rec.check("linear: reduction conjugation", reduction_conjugation_check(lin, lin_reduced, phi),
              "change of basis does not conjugate the presentations");
  });
  rec.guarded("linear: ideal equality", [&] {
    const DualElement x_phi = contract(variable(phi.field(), 0), phi);
    const auto cmp = ideal_equality_check(lin.generators, x_phi, x_phi.degree() + 1);
    rec.check("linear: ideal equality", cmp.equal(), comparison_detail(cmp));
  });
}

void quadratic_checks(Recorder& rec, const DualElement& phi, const LinearPresentation& lin,
                      const QuadraticPresentation& quad) {
  const int n = lin.n;
  rec.check("quadratic: alternating", is_alternating(quad.syzygies));
  rec.check("quadratic: homogeneity",
            quad.syzygies.degree() == 2 && quad.syzygies.is_homogeneous() &&
                all_of_degree(quad.generators, n),
            "entries of the wrong degree");
  rec.guarded("quadratic: generators * syzygies = 0", [&] {
    const auto row = PolyMatrix::row(lin.field, n, quad.generators);
    rec.check("quadratic: generators * syzygies = 0", (row * quad.syzygies).is_zero(),
              "nonzero product");
  });
  rec.guarded("quadratic: explicit generators proportional", [&] {
    const Scalar u = proportionality_unit(quad.generators, quad.explicit_generators);
    rec.pass("quadratic: explicit generators proportional", "unit " + u.to_string());
  });
  rec.guarded("quadratic: Pfaffian factorization", [&] {
    rec.check("quadratic: Pfaffian factorization", pfaffian_factorization_check(lin, quad),
              "Pf(linear minor) != Pf(a_prime) Pf(quadratic minor)");
  });
  rec.guarded("quadratic: ideal equality", [&] {
    const auto hyp = check_hypotheses(phi, n);
    if (!hyp.holds()) {
      rec.skip("quadratic: ideal equality", "x is not a Lefschetz element or J_{n-1} != 0");
      return;
    }
    const auto cmp = ideal_equality_check(quad.generators, phi, phi.degree() + 1);
    rec.check("quadratic: ideal equality", cmp.equal(), comparison_detail(cmp));
  });
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (c.outcome == CheckOutcome::Fail) return false;
  }
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.outcome == CheckOutcome::Pass ? "PASS" : c.outcome == CheckOutcome::Fail ? "FAIL" : "SKIP")
        << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

int presentation_size(const DualElement& phi) {
  if (phi.degree() % 2 == 0) {
    throw std::invalid_argument("inverse system must have odd degree 2n-1, got " +
                                std::to_string(phi.degree()));
  }
  return (phi.degree() + 1) / 2;
}

VerificationReport verify_presentations(const DualElement& phi, const LinearPresentation& lin,
                                        const std::optional<QuadraticPresentation>& quad) {
  Recorder rec;
  if (!lin.linearly_presented) {
    rec.fail("linear: p invertible", "p singular, rank " + std::to_string(lin.p_rank));
    return rec.done();
  }
  rec.pass("linear: p invertible");
  linear_checks(rec, phi, lin);

  if (!quad) {
    rec.skip("quadratic", "not built");
  } else if (quad->status == QuadraticStatus::OddN) {
    rec.skip("quadratic", "n odd: a_prime necessarily singular");
  } else if (quad->status == QuadraticStatus::SingularAPrime) {
    rec.skip("quadratic", "a_prime singular, rank " + std::to_string(quad->a_prime_rank));
  } else {
    quadratic_checks(rec, phi, lin, *quad);
  }
  return rec.done();
}

VerificationReport run_verification(const DualElement& phi) {
  const int n = presentation_size(phi);
  const auto lin = build_linear_presentation(phi, n);
  std::optional<QuadraticPresentation> quad;
  if (lin.linearly_presented) quad = build_quadratic_presentation(lin);
  return verify_presentations(phi, lin, quad);
}

}  // namespace gorenstein
