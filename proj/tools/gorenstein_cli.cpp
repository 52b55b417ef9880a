// Command-line front end.
//
// Exit codes:
//   0  success
//   1  usage, parse or I/O error
//   2  p singular (resolve in linear or auto mode)
//   3  a_prime singular or n odd (resolve in quadratic mode)
//   4  a verification check failed, or the results were internally inconsistent

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "gorenstein/json_io.hpp"
#include "gorenstein/oracle.hpp"
#include "gorenstein/verify.hpp"

using namespace gorenstein;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kPSingular = 2;
constexpr int kAPrimeSingular = 3;
constexpr int kCheckFailed = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 2;
  std::string field;
  std::string mode = "auto";
  std::string ell = "x";
  int max_degree = -1;
  std::string out;
  std::string input;
  bool clear_denominators = false;
  bool kernel_bases = false;
  std::uint64_t seed = 1;
};

void emit(const Options& opt, const Json& j) {
  if (opt.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(opt.out, j);
  }
}

Scalar to_field(const Scalar& s, const Field& field) {
  if (s.field() == field) return s;
  if (!s.field().is_rational()) {
    throw UsageError("cannot move a prime-field inverse system to " + field.to_string());
  }
  const Scalar den(field, mpz_class(s.rational().get_den()));
  if (den.is_zero()) throw UsageError("a denominator vanishes in " + field.to_string());
  return Scalar(field, mpz_class(s.rational().get_num())) / den;
}

DualElement load_phi(const Options& opt) {
  DualElement phi = read_dual_file(opt.input);
  if (opt.field.empty()) return phi;
  const Field field = Field::parse(opt.field);
  DualElement out(field, phi.degree());
  for (std::size_t i = 0; i < phi.size(); ++i) out.coefficient_at(i) = to_field(phi.coefficient_at(i), field);
  return out;
}

int example_family(const Options& opt) {
  if (opt.n < 1) throw UsageError("--n must be positive");
  if (!opt.field.empty() && !Field::parse(opt.field).is_rational()) {
    throw UsageError("the example family is defined over Q only");
  }
  if (opt.n % 2 == 1) std::cerr << "warning: n odd: quadratic path will report singular A'\n";
  emit(opt, to_json(family_phi(opt.n)));
  return kOk;
}

int random_phi(const Options& opt) {
  if (opt.n < 1) throw UsageError("--n must be positive");
  const Field field = Field::parse(opt.field.empty() ? "Fp:32003" : opt.field);
  std::mt19937_64 rng(opt.seed);
  DualElement phi(field, 2 * opt.n - 1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (field.is_rational()) {
      std::uniform_int_distribution<long> dist(-9, 9);
      phi.coefficient_at(i) = Scalar(field, dist(rng));
    } else {
      std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
      phi.coefficient_at(i) = Scalar(field, mpz_class(static_cast<unsigned long>(dist(rng))));
    }
  }
  emit(opt, to_json(phi));
  return kOk;
}

int resolve(const Options& opt) {
  const DualElement phi = load_phi(opt);
  const int n = presentation_size(phi);
  const auto lin = build_linear_presentation(phi, n);
  const ReportOptions report_options{.clear_denominators = opt.clear_denominators};
  if (!lin.linearly_presented) {
    emit(opt, resolution_report(lin, std::nullopt, report_options));
    std::cerr << "p singular, rank " << lin.p_rank << '\n';
    return kPSingular;
  }
  std::optional<QuadraticPresentation> quad;
  if (opt.mode != "linear") {
    quad = build_quadratic_presentation(lin);
    if (!quad->quadratically_presented() && check_hypotheses(phi, n).holds()) {
      quad->hypotheses_checked = true;
    }
  }
  emit(opt, resolution_report(lin, quad, report_options));
  std::cerr << "n = " << n << ": linearly presented, " << 2 * n + 1 << " generators of degree "
            << n << '\n';
  if (quad) {
    if (quad->quadratically_presented()) {
      std::cerr << "quadratically presented, " << n + 1 << " generators of degree " << n << '\n';
    } else {
      std::cerr << (quad->status == QuadraticStatus::OddN
                        ? "n odd: A' is necessarily singular"
                        : "A' singular, rank " + std::to_string(quad->a_prime_rank))
                << '\n';
      if (opt.mode == "quadratic") return kAPrimeSingular;
    }
  }
  return kOk;
}

int verify(const Options& opt) {
  const auto report = run_verification(load_phi(opt));
  std::cout << report.to_text();
  std::cout << (report.passed() ? "all checks passed" : "verification failed") << '\n';
  return report.passed() ? kOk : kCheckFailed;
}

int wlp(const Options& opt) {
  const DualElement phi = load_phi(opt);
  Polynomial ell;
  try {
    ell = parse_polynomial(phi.field(), opt.ell, 1);
  } catch (const std::exception& e) {
    throw UsageError("--ell: " + std::string(e.what()));
  }
  if (ell.degree() != 1 || ell.is_zero()) throw UsageError("--ell must be a nonzero linear form");
  const auto report = wlp_test(phi, ell);
  emit(opt, to_json(report));
  std::cerr << to_string(ell) << (report.lefschetz ? " is" : " is not")
            << " a weak Lefschetz element (det M = " << report.determinant << ")\n";
  return kOk;
}

int oracle(const Options& opt) {
  const auto summary = summarize_ideal(load_phi(opt), opt.max_degree, opt.kernel_bases);
  emit(opt, to_json(summary, opt.kernel_bases));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein ideals of codimension three from inverse systems"};
  app.require_subcommand(1);
  Options opt;

  auto* family = app.add_subcommand("example-family", "Write the inverse system of (x^{n+1},y^{n+1},z^{n+1}):(x+y+z)^{n+1}");
  family->add_option("--n", opt.n, "n >= 1 (even for the quadratic path)")->required();
  family->add_option("--field", opt.field, "Q only");
  family->add_option("--out", opt.out, "Output file (default stdout)");

  auto* random = app.add_subcommand("random-phi", "Write a random inverse system of degree 2n-1");
  random->add_option("--n", opt.n)->required();
  random->add_option("--field", opt.field, "Q or Fp:<p> (default Fp:32003)");
  random->add_option("--seed", opt.seed);
  random->add_option("--out", opt.out);

  auto* res = app.add_subcommand("resolve", "Build the linear and quadratic presentations");
  res->add_option("phi", opt.input, "Inverse system file")->required();
  res->add_option("--mode", opt.mode)->check(CLI::IsMember({"auto", "linear", "quadratic"}));
  res->add_option("--field", opt.field, "Reduce the input to this field");
  res->add_option("--out", opt.out);
  res->add_flag("--clear-denominators", opt.clear_denominators,
                "Print each matrix as factor * integer matrix");

  auto* ver = app.add_subcommand("verify", "Run every consistency check");
  ver->add_option("phi", opt.input)->required();
  ver->add_option("--field", opt.field);

  auto* lef = app.add_subcommand("wlp", "Weak Lefschetz determinant test");
  lef->add_option("phi", opt.input)->required();
  lef->add_option("--ell", opt.ell, "Linear form a*x+b*y+c*z (default x)");
  lef->add_option("--field", opt.field);
  lef->add_option("--out", opt.out);

  auto* orc = app.add_subcommand("oracle", "Hilbert function and generator counts of ann(phi)");
  orc->add_option("phi", opt.input)->required();
  orc->add_option("--max-degree", opt.max_degree, "Default: deg phi + 1");
  orc->add_option("--field", opt.field);
  orc->add_option("--out", opt.out);
  orc->add_flag("--kernel-bases", opt.kernel_bases, "Include a basis of each graded piece");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (family->parsed()) return example_family(opt);
    if (random->parsed()) return random_phi(opt);
    if (res->parsed()) return resolve(opt);
    if (ver->parsed()) return verify(opt);
    if (lef->parsed()) return wlp(opt);
    if (orc->parsed()) return oracle(opt);
  } catch (const ProportionalityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
