#include "expnev/numeric/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expnev/errors.hpp"
#include "expnev/numeric/quadrature.hpp"

namespace expnev::numeric {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOrigin = 1e-9;
constexpr int kCircleIntervals = 20000;

// Mean over theta of h(r e^{i theta}); tolerance defaults to 1e-6 * max(1, crude).
template <class H>
double circle_mean(H&& h, double r, double abs_tol) {
  auto integrand = [&](double t) { return h(std::polar(r, t)); };
  if (abs_tol <= 0) {
    double crude = 0;
    for (int k = 0; k < 64; ++k) crude += std::abs(integrand(kTwoPi * (k + 0.5) / 64));
    crude /= 64;
    abs_tol = 1e-6 * std::max(1.0, crude);
  }
  const auto res = integrate<double>(integrand, 0.0, kTwoPi, abs_tol * kTwoPi, 0.0, kCircleIntervals);
  if (!res.converged) throw NumericError("circle quadrature did not converge at r = " + std::to_string(r));
  return res.value / kTwoPi;
}

void require_no_pole_on_circle(const ExpPolyFunction& f, double r) {
  for (const cd& p : f.poles())
    if (std::abs(std::abs(p) - r) < 1e-9 * std::max(1.0, r))
      throw PreconditionError("coefficient pole on |z| = " + std::to_string(r));
}

double log_plus(double v) { return v > 0 ? v : 0.0; }

}  // namespace

double counting_function(const std::vector<ZeroRecord>& zeros, double r, int Q) {
  double n = 0;
  for (const auto& z : zeros) {
    const double a = std::abs(z.location);
    if (a > r) continue;
    const double w = std::min(Q, z.multiplicity);
    n += a < kOrigin ? w * std::log(r) : w * std::log(r / a);
  }
  return n;
}

int raw_count(const std::vector<ZeroRecord>& zeros, double r) {
  int n = 0;
  for (const auto& z : zeros)
    if (std::abs(z.location) <= r) n += z.multiplicity;
  return n;
}

double proximity_function(const ExpPolyFunction& f, double r, double abs_tol) {
  require_no_pole_on_circle(f, r);
  return circle_mean([&](cd z) { return log_plus(f.log_abs(z)); }, r, abs_tol);
}

double proximity_to_value(const ExpPolyFunction& f, const GR& a, double r, double abs_tol) {
  const ExpPolyFunction g = f.minus_constant(a);
  require_no_pole_on_circle(g, r);
  return circle_mean([&](cd z) { return log_plus(-g.log_abs(z)); }, r, abs_tol);
}

std::vector<ZeroRecord> poles_in_disk(const ExpPolyFunction& f, double r) {
  std::vector<ZeroRecord> out;
  if (f.poles().empty()) return out;
  const ExpPolyFunction g = f.cleared();
  std::vector<ZeroRecord> grouped;
  for (const cd& p : f.poles()) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](const ZeroRecord& q) {
      return std::abs(q.location - p) <= 1e-6 * std::max(1.0, std::abs(p));
    });
    if (it == grouped.end()) grouped.push_back({p, 1, 0, 0});
    else ++it->multiplicity;
  }
  for (auto& p : grouped) {
    if (std::abs(p.location) > r) continue;
    double sep = INFINITY;
    for (const auto& q : grouped)
      if (&q != &p) sep = std::min(sep, std::abs(q.location - p.location));
    const double rho = std::min(0.45 * sep, 1e-4 * std::max(1.0, std::abs(p.location)));
    const cd w = winding_integral(g, p.location, rho);
    if (!std::isfinite(w.real())) throw NumericError("winding integral failed near a coefficient pole");
    const int net = p.multiplicity - static_cast<int>(std::lround(w.real()));
    if (net > 0) out.push_back({p.location, net, rho, 0});
  }
  std::sort(out.begin(), out.end(), zero_order);
  return out;
}

double characteristic_value(const ExpPolyFunction& f, double r) {
  return proximity_function(f, r) + counting_function(poles_in_disk(f, r), r);
}

double characteristic_map(const std::vector<ExpPolyFunction>& fs, double r, double abs_tol) {
  if (fs.empty()) throw PreconditionError("characteristic_map needs at least one component");
  for (const auto& f : fs) require_no_pole_on_circle(f, r);
  return circle_mean(
      [&](cd z) {
        double best = -INFINITY;
        for (const auto& f : fs) best = std::max(best, f.log_abs(z));
        return best;
      },
      r, abs_tol);
}

NevanlinnaSample characteristic_sample(const ExpPolyFunction& f, double r, const SampleOptions& opts) {
  ZeroOptions zo;
  zo.tol = opts.tol;
  const ZeroSearch zs = find_zeros(f, r, zo);
  NevanlinnaSample s;
  s.r = r;
  s.r_used = zs.radius;
  s.m = proximity_function(f, zs.radius);
  s.N_poles = counting_function(poles_in_disk(f, zs.radius), zs.radius);
  s.T = s.m + s.N_poles;
  s.N = counting_function(zs.zeros, zs.radius);
  for (int q : opts.levels) s.N_trunc[q] = counting_function(zs.zeros, zs.radius, q);
  s.n_count = raw_count(zs.zeros, zs.radius);
  return s;
}

std::vector<NevanlinnaSample> characteristic(const ExpPolyFunction& f, const std::vector<double>& grid,
                                             const SampleOptions& opts) {
  std::vector<NevanlinnaSample> out;
  out.reserve(grid.size());
  for (double r : grid) out.push_back(characteristic_sample(f, r, opts));
  return out;
}

GcdCount gcd_counting(const ExpPolyFunction& f, const ExpPolyFunction& g, double r, double tol) {
  ZeroOptions zo;
  zo.tol = tol;
  ZeroSearch zf = find_zeros(f, r, zo);
  ZeroSearch zg = find_zeros(g, zf.radius, zo);
  // Both searches must end on one radius; at most a couple of rounds.
  for (int round = 0; round < 3 && zg.radius != zf.radius; ++round) {
    zf = find_zeros(f, zg.radius, zo);
    if (zf.radius == zg.radius) break;
    zg = find_zeros(g, zf.radius, zo);
  }
  if (zg.radius != zf.radius) throw NumericError("no common clean radius for gcd counting");

  GcdCount out;
  out.r_used = zf.radius;
  for (const auto& a : zf.zeros) {
    const double scale = std::max(1.0, std::abs(a.location));
    const double same = 1e-7 * scale;
    const ZeroRecord* match = nullptr;
    for (const auto& b : zg.zeros) {
      const double d = std::abs(a.location - b.location);
      if (d <= same) {
        if (match) throw NumericError("ambiguous pairing of common zeros");
        match = &b;
      } else if (d < 1e-4 * scale) {
        throw NumericError("zeros of f and g too close to decide whether they coincide");
      }
    }
    if (match) out.common.push_back({a.location, std::min(a.multiplicity, match->multiplicity), a.enclosure_radius,
                                     std::max(a.residual, match->residual)});
  }
  out.value = counting_function(out.common, out.r_used);
  return out;
}

double order_estimate(const std::vector<double>& radii, const std::vector<double>& T) {
  if (radii.size() != T.size()) throw std::invalid_argument("order_estimate: size mismatch");
  if (radii.size() < 4) throw PreconditionError("order estimate needs at least 4 radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw PreconditionError("order estimate needs increasing radii");
  const std::size_t lo = radii.size() / 2;
  const double top = *std::max_element(T.begin() + lo, T.end());
  const double bottom = *std::min_element(T.begin() + lo, T.end());
  // Bounded characteristic: order 0.
  if (top - bottom <= 1e-6 * std::max(1.0, std::abs(top)) || bottom <= 0) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(radii.size() - lo);
  for (std::size_t i = lo; i < radii.size(); ++i) {
    const double x = std::log(radii[i]), y = std::log(T[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double order_estimate(const ExpPolyFunction& f, const std::vector<double>& grid) {
  std::vector<double> T;
  for (double r : grid) T.push_back(characteristic_value(f, r));
  return order_estimate(grid, T);
}

JensenResult jensen_check(const ExpPolyFunction& f, double r, double tol) {
  if (f.denominator().degree() > 0) throw PreconditionError("Jensen check needs an entire function");
  ZeroOptions zo;
  zo.tol = tol;
  const ZeroSearch zs = find_zeros(f, r, zo);
  int k = 0;
  for (const auto& z : zs.zeros)
    if (std::abs(z.location) < kOrigin) k = z.multiplicity;
  ExpPolyFunction d = f;
  double factorial = 1;
  for (int j = 1; j <= k; ++j) {
    d = d.derived();
    factorial *= j;
  }
  JensenResult out;
  out.r_used = zs.radius;
  out.predicted = d.log_abs(0) - std::log(factorial) + counting_function(zs.zeros, zs.radius);
  out.circle_mean = circle_mean([&](cd z) { return f.log_abs(z); }, zs.radius, 1e-8);
  return out;
}

std::vector<double> make_grid(double a, double b, int count, bool geometric) {
  if (count < 2 || !(a < b) || !(a > 0)) throw PreconditionError("grid needs 0 < start < stop and count >= 2");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    g[i] = geometric ? a * std::pow(b / a, t) : a + (b - a) * t;
  }
  g.back() = b;
  return g;
}

}  // namespace expnev::numeric
