// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "builders.hpp"
#include "expnev/algebra.hpp"
#include "expnev/discriminant.hpp"
#include "expnev/numeric/checks.hpp"
#include "expnev/numeric/nevanlinna.hpp"
#include "expnev/roots.hpp"
#include "random_inputs.hpp"

using namespace expnev;
using namespace expnev::numeric;
namespace tk = expnev::testkit;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

ExpPolyFunction fn(const std::string& text) {
  const auto l = tk::lowered(text);
  return ExpPolyFunction(l.poly, l.basis);
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// 1. T_{e^z} = r/pi and T_{e^{z^2}} = r^2/pi within 1%.
void characteristic_oracle(Verdict& v) {
  double worst = 0;
  for (double r : {5.0, 10.0, 20.0}) worst = std::max(worst, rel(characteristic_value(fn("exp[z]"), r), r / kPi));
  for (double r : {3.0, 5.0, 8.0})
    worst = std::max(worst, rel(characteristic_value(fn("exp[z^2]"), r), r * r / kPi));
  v.detail << "max relative error " << worst;
  v.require(worst <= 0.01, "relative error <= 0.01");
}

// 2. e^z - 1 on |z| <= 20: the seven simple zeros 2 pi i k, |k| <= 3.
void zero_count_oracle(Verdict& v) {
  const auto f = fn("exp[z] - 1");
  const auto zs = zeros_in_disk(f, 20);
  v.require(zs.size() == 7, "exactly 7 zeros");
  double worst = 0;
  std::set<int> seen;
  for (const auto& z : zs) {
    v.require(z.multiplicity == 1, "simple zero");
    const int k = static_cast<int>(std::lround(z.location.imag() / (2 * kPi)));
    seen.insert(k);
    worst = std::max(worst, std::abs(z.location - cd(0, 2 * kPi * k)));
  }
  v.require(seen.size() == 7 && *seen.begin() == -3 && *seen.rbegin() == 3, "k = -3..3 each once");
  v.require(worst <= 1e-9, "location error <= 1e-9");
  const auto j = jensen_check(f, 20);
  v.detail << "zeros " << zs.size() << ", max location error " << worst << ", Jensen difference " << j.difference();
  v.require(std::abs(j.difference()) <= 1e-4, "Jensen within 1e-4");
}

// 3. m(1) + N(1) - T bounded for e^z on [5, 50].
void first_main(Verdict& v) {
  const auto l = tk::lowered("exp[z]");
  const auto rep = first_main_check(l.poly, l.basis, GR(1), make_grid(5, 50, 10, false));
  const auto [lo, hi] = std::minmax_element(rep.margin.begin(), rep.margin.end());
  v.detail << "oscillation " << (*hi - *lo);
  v.require(rep.preconditions_ok && rep.margin.size() == 10, "ten radii evaluated");
  v.require(*hi - *lo <= 1.0, "oscillation <= 1");
}

// 4. G = x0 + x1 + x2 over (e^z, e^{iz}, e^{z^2}) up to r = 8.
void smt_instance(Verdict& v) {
  const auto rep = smt_moving_check(tk::xpoly("x0 + x1 + x2", 3), tk::basis("z; i*z; z^2"), make_grid(4, 8, 5, false));
  v.require(rep.preconditions_ok, "preconditions");
  const auto& simple = rep.column("simple_ratio");
  const std::size_t n = rep.lhs.size();
  for (std::size_t k = n - 2; k < n; ++k) {
    v.detail << "r=" << rep.r[k] << ": (N-N1)/T=" << rep.lhs[k] << " N1/T=" << simple[k] << "; ";
    v.require(rep.lhs[k] <= 0.05, "(N - N1)/T <= 0.05");
    v.require(simple[k] >= 0.9, "N1/T >= 0.9");
  }
}

// 5. u1 + 1 and u2 + 1 over (e^z, e^{z^2}) share no zeros for r <= 10.
void gcd_instance(Verdict& v) {
  const auto rep = gcd_smallness_check(tk::xpoly("x0 + 1", 2), tk::xpoly("x1 + 1", 2), tk::basis("z; z^2"),
                                       make_grid(1, 10, 10, false));
  v.require(rep.preconditions_ok, "preconditions");
  double worst = 0;
  for (double x : rep.lhs) worst = std::max(worst, std::abs(x));
  v.detail << "max ratio " << worst << " over " << rep.lhs.size() << " radii";
  v.require(worst == 0.0, "ratio 0 at every radius");
}

// 6. f0 + f1 + f2 + f3 = 0 with f3 = -(e^{z^2} + e^z + 1); N^(2)_{f3} / T_f at r = 8.
void borel_instance(Verdict& v) {
  const std::vector<std::string> texts = {"exp[z^2]", "exp[z]", "1", "-(exp[z^2] + exp[z] + 1)"};
  std::vector<expr::Node> asts;
  for (const auto& t : texts) asts.push_back(expr::parse_expression(t));
  const auto lm = expr::lower_jointly(asts);

  // Symbolic subsum test, done here directly on the lowered polynomials.
  int vanishing = 0, total = 0;
  for (unsigned mask = 1; mask < 15u; ++mask) {
    LaurentPoly s(lm.basis.size());
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) s += lm.polys[i];
    ++total;
    if (s.is_zero()) ++vanishing;
  }
  LaurentPoly all(lm.basis.size());
  for (const auto& p : lm.polys) all += p;
  v.require(all.is_zero() && vanishing == 0, "total sum zero, no proper subsum zero");

  const auto rep = trunborel_check(lm.polys, lm.basis, {8.0});
  v.require(rep.preconditions_ok, "library subsum verification");

  std::vector<ExpPolyFunction> f;
  for (const auto& p : lm.polys) f.emplace_back(p, lm.basis);
  const double T = characteristic_map({f[0], f[1], f[2]}, 8.0);
  const double n2 = counting_function(zeros_in_disk(f[3], 8.0), 8.0, 2);
  const double ratio = n2 / T;
  v.detail << "proper subsums checked " << total << ", N2(f3)/T = " << ratio;
  v.require(ratio >= 0.9 && ratio <= 1.05, "ratio in [0.9, 1.05]");
}

// 7. Product rule, square-free reassembly and critical-pair coprimality on random inputs.
void symbolic_exactness(Verdict& v) {
  tk::RandomInputs rnd(20240607);
  int product = 0, reassembly = 0, coprime = 0;
  for (int t = 0; t < 200; ++t) {
    const UnitBasis b = rnd.independent_basis(rnd.integer(1, 3));
    const LaurentPoly F = rnd.laurent(b.size(), 3, -2, 2), G = rnd.laurent(b.size(), 3, -2, 2);
    if (derivation_Du(F * G, b) == derivation_Du(F, b) * G + F * derivation_Du(G, b)) ++product;
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 2));
    const LaurentPoly a = rnd.nonmonomial_polynomial(n, 2, 2), b = rnd.nonmonomial_polynomial(n, 2, 1);
    const LaurentPoly f = a * b.pow(static_cast<unsigned>(rnd.integer(1, 3))) * LaurentPoly::variable(n, 0, rnd.integer(-2, 2));
    const auto d = squarefree_decompose(f);
    bool ok = d.reassemble() == f;
    for (const auto& [s, k] : d.factors) ok = ok && is_squarefree(s);
    if (ok) ++reassembly;
  }
  for (int t = 0; t < 50; ++t) {
    const UnitBasis b = rnd.independent_basis(2);
    const LaurentPoly a = rnd.nonmonomial_polynomial(2, 2, 2), c = rnd.nonmonomial_polynomial(2, 2, 1);
    const auto cp = critical_pair(a * c * c, b);
    if (cp.gcd == LaurentPoly::constant(2, RatFunc(1))) ++coprime;
  }
  v.detail << "product rule " << product << "/200, reassembly " << reassembly << "/100, coprime pairs " << coprime
           << "/50";
  v.require(product == 200 && reassembly == 100 && coprime == 50, "all cases exact");
}

// 8. Root extraction, each root substituted back exactly.
void root_extraction(Verdict& v) {
  const auto check = [&](const std::string& text, const std::vector<std::string>& expected) {
    const auto ly = expr::lower_ypoly(expr::parse_expression(text));
    const auto roots = extract_exp_poly_roots(ly.poly, ly.basis);
    v.require(roots.size() == expected.size(), text + ": root count");
    std::set<std::size_t> matched;
    for (const auto& g : roots) {
      const LaurentPoly residual = ly.poly.to_ypoly()
                                       .map_coefficients([&](const LaurentPoly& c) { return c.rescale(g.refinement); })
                                       .evaluate(g.root);
      v.require(residual.is_zero(), text + ": F(g) = 0");
      for (std::size_t k = 0; k < expected.size(); ++k)
        if (tk::over(expected[k], g.basis) == g.root) matched.insert(k);
    }
    v.require(matched.size() == expected.size(), text + ": expected roots");
    v.detail << text << " -> " << roots.size() << " roots; ";
  };
  check("Y^2 - 2*z*Y + z^2 - exp[2*z]", {"z + exp[z]", "z - exp[z]"});
  check("Y^2 - exp[2*z]", {"exp[z]", "-exp[z]"});
  check("Y^2 - z", {});
}

// 9. Exact discriminant of a monic cubic over one unit, specialized at z0,
// against prod (a_i - a_j)^2 over companion-matrix eigenvalues and against the
// classical closed form on the specialized coefficients.
void discriminant_specialization(Verdict& v) {
  using cl = std::complex<long double>;
  tk::RandomInputs rnd(97531);
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  const auto horner = [](const ZPoly& p, cl z0) {
    cl acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z0 + it->to_complex_ld();
    return acc;
  };
  // sum_e a_e(z0) exp(e * Q(z0)) in long double.
  const auto eval = [&](const LaurentPoly& p, const ZPoly& q, cl z0) {
    const cl qz = horner(q, z0);
    cl acc = 0;
    for (const auto& [e, a] : p.terms())
      acc += horner(a.num(), z0) / horner(a.den(), z0) * std::exp(static_cast<long double>(e[0]) * qz);
    return acc;
  };
  int agree = 0;
  long double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const UnitBasis b = rnd.independent_basis(1);
    const LaurentPoly B = rnd.laurent(1, 2, -1, 1), C = rnd.laurent(1, 2, -1, 1), D = rnd.laurent(1, 2, -1, 1);
    const LaurentPoly delta = discriminant(MonicYPoly(1, {D, C, B}));
    const cl z0(coord(rnd.engine()), coord(rnd.engine()) + 1.5);
    const ZPoly& q = b.frequency(0);
    const cl b0 = eval(B, q, z0), c0 = eval(C, q, z0), d0 = eval(D, q, z0);
    const cl closed = b0 * b0 * c0 * c0 - 4.0L * c0 * c0 * c0 - 4.0L * b0 * b0 * b0 * d0 - 27.0L * d0 * d0 +
                      18.0L * b0 * c0 * d0;
    Eigen::Matrix<cl, 3, 3> companion = Eigen::Matrix<cl, 3, 3>::Zero();
    companion(1, 0) = companion(2, 1) = 1;
    companion(0, 2) = -d0;
    companion(1, 2) = -c0;
    companion(2, 2) = -b0;
    const Eigen::ComplexEigenSolver<Eigen::Matrix<cl, 3, 3>> eig(companion);
    const auto& a = eig.eigenvalues();
    const cl from_roots = std::pow((a(0) - a(1)) * (a(0) - a(2)) * (a(1) - a(2)), 2);
    const cl exact = eval(delta, q, z0);
    const long double err =
        std::max(std::abs(exact - closed) / std::abs(closed), std::abs(exact - from_roots) / std::abs(from_roots));
    worst = std::max(worst, err);
    if (err <= 1e-10L) ++agree;
  }
  v.detail << agree << "/20 agree, worst relative difference " << static_cast<double>(worst);
  v.require(agree == 20, "10 significant digits");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"characteristic oracle", characteristic_oracle},
      {"zero count oracle", zero_count_oracle},
      {"first main theorem", first_main},
      {"moving-target smt instance", smt_instance},
      {"gcd smallness instance", gcd_instance},
      {"truncated borel instance", borel_instance},
      {"symbolic exactness", symbolic_exactness},
      {"root extraction", root_extraction},
      {"discriminant specialization", discriminant_specialization},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s %zu %s (%.2fs): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                v.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
