#include "expnev/numeric/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "expnev/errors.hpp"
#include "expnev/numeric/quadrature.hpp"

namespace expnev::numeric {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEdgeAbsTol = 1e-6;
// Accept an unconverged edge when its error estimate is still far below the
// integer spacing (rounding noise near multiple zeros).
constexpr double kEdgeAcceptErr = 1e-3;
constexpr int kEdgeIntervals = 3000;
constexpr double kIntegralSlack = 0.05;

struct Cell {
  double x0, y0, x1, y1;
  double half() const { return 0.5 * (x1 - x0); }
  cd center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  bool contains(cd z, double pad) const {
    return z.real() >= x0 - pad && z.real() <= x1 + pad && z.imag() >= y0 - pad && z.imag() <= y1 + pad;
  }
};

struct Cluster {
  cd location;
  int multiplicity;
  double half;
};

class Search {
 public:
  explicit Search(const ExpPolyFunction& g) : g_(g) {}

  // Integral of g'/g along the segment a -> b, cached by unordered endpoints.
  cd edge(cd a, cd b) {
    const auto key_a = std::pair(a.real(), a.imag()), key_b = std::pair(b.real(), b.imag());
    const bool flip = key_b < key_a;
    const auto key = flip ? std::pair(key_b, key_a) : std::pair(key_a, key_b);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const cd p = flip ? b : a, q = flip ? a : b;
      const cd dz = q - p;
      auto integrand = [&](double t) { return g_.log_derivative(p + t * dz) * dz; };
      const auto res = integrate<cd>(integrand, 0.0, 1.0, kEdgeAbsTol, 1e-10, kEdgeIntervals);
      it = cache_.emplace(key, res.converged || res.error < kEdgeAcceptErr ? res.value : cd(NAN, NAN)).first;
    }
    return flip ? -it->second : it->second;
  }

  // Winding number of the cell boundary, or nullopt when not near an integer.
  std::optional<int> winding(const Cell& c) {
    const cd a(c.x0, c.y0), b(c.x1, c.y0), d(c.x1, c.y1), e(c.x0, c.y1);
    const cd total = (edge(a, b) + edge(b, d) + edge(d, e) + edge(e, a)) / cd(0, kTwoPi);
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) return std::nullopt;
    const double k = std::round(total.real());
    if (std::abs(total.real() - k) > kIntegralSlack || std::abs(total.imag()) > kIntegralSlack) return std::nullopt;
    return static_cast<int>(k);
  }

  // (1/2 pi i) * integral of z g'/g around the cell; used to locate clusters.
  cd first_moment(const Cell& c) {
    const std::array<cd, 5> v = {cd(c.x0, c.y0), cd(c.x1, c.y0), cd(c.x1, c.y1), cd(c.x0, c.y1), cd(c.x0, c.y0)};
    cd total = 0;
    for (int s = 0; s < 4; ++s) {
      const cd p = v[s], dz = v[s + 1] - v[s];
      auto integrand = [&](double t) {
        const cd z = p + t * dz;
        return z * g_.log_derivative(z) * dz;
      };
      total += integrate<cd>(integrand, 0.0, 1.0, 1e-12, 1e-12, kEdgeIntervals).value;
    }
    return total / cd(0, kTwoPi);
  }

  // Newton with multiplicity m started at z0; result must stay inside the cell.
  std::optional<cd> newton(cd z0, int m, const Cell& c) {
    cd z = z0;
    const double pad = 1e-9 * std::max(1.0, c.half());
    double last = INFINITY;
    for (int it = 0; it < 80; ++it) {
      const cd ld = g_.log_derivative(z);
      if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag())) return std::nullopt;
      if (ld == cd(0)) return std::nullopt;
      const cd step = static_cast<double>(m) / ld;
      z -= step;
      if (!c.contains(z, pad)) return std::nullopt;
      const double s = std::abs(step);
      if (s <= 4e-16 * std::max(1.0, std::abs(z))) return z;
      if (it > 10 && s >= last) return s < 1e-12 * std::max(1.0, std::abs(z)) ? std::optional<cd>(z) : std::nullopt;
      last = s;
    }
    return std::nullopt;
  }

  void run(const Cell& root, int w, double cluster_half) {
    cluster_half_ = cluster_half;
    process(root, w, 0);
  }

  std::vector<Cluster> found;

 private:
  const ExpPolyFunction& g_;
  std::map<std::pair<std::pair<double, double>, std::pair<double, double>>, cd> cache_;
  double cluster_half_ = 0;

  void process(const Cell& c, int w, int depth) {
    if (w == 0) return;
    if (w < 0) throw NumericError("negative winding number in zero search (pole inside a cell)");
    if (w == 1) {
      if (auto z = newton(c.center(), 1, c)) {
        found.push_back({*z, 1, c.half()});
        return;
      }
    }
    if (c.half() <= cluster_half_ || depth > 60) {
      cd loc = first_moment(c) / static_cast<double>(w);
      if (!c.contains(loc, c.half())) loc = c.center();
      if (auto z = newton(loc, w, c)) loc = *z;
      found.push_back({loc, w, c.half()});
      return;
    }
    // Split point slightly off center; retry with other offsets when a child
    // edge passes too close to a zero.
    static constexpr std::array<std::pair<double, double>, 6> offsets = {
        {{0.0131, 0.0173}, {-0.0219, 0.0097}, {0.0311, -0.0257}, {-0.0413, -0.0371}, {0.0733, 0.0529}, {-0.0917, 0.0811}}};
    for (const auto& [ox, oy] : offsets) {
      const double mx = 0.5 * (c.x0 + c.x1) + ox * (c.x1 - c.x0);
      const double my = 0.5 * (c.y0 + c.y1) + oy * (c.y1 - c.y0);
      const std::array<Cell, 4> kids = {Cell{c.x0, c.y0, mx, my}, Cell{mx, c.y0, c.x1, my}, Cell{c.x0, my, mx, c.y1},
                                        Cell{mx, my, c.x1, c.y1}};
      std::array<int, 4> ws{};
      bool ok = true;
      int sum = 0;
      for (int k = 0; k < 4 && ok; ++k) {
        const auto wk = winding(kids[k]);
        if (!wk) ok = false;
        else {
          ws[k] = *wk;
          sum += *wk;
        }
      }
      if (!ok || sum != w) continue;
      for (int k = 0; k < 4; ++k) process(kids[k], ws[k], depth + 1);
      return;
    }
    throw NumericError("winding integrals are not integral after subdivision retries near " +
                       std::to_string(c.center().real()) + "+" + std::to_string(c.center().imag()) + "i");
  }
};

double nearest_other(const std::vector<Cluster>& cs, std::size_t i) {
  double d = INFINITY;
  for (std::size_t j = 0; j < cs.size(); ++j)
    if (j != i) d = std::min(d, std::abs(cs[i].location - cs[j].location));
  return d;
}

// Group numeric denominator roots into (location, multiplicity).
std::vector<Cluster> group_poles(const std::vector<cd>& roots) {
  std::vector<Cluster> out;
  for (const cd& p : roots) {
    bool merged = false;
    for (auto& c : out)
      if (std::abs(c.location - p) <= 1e-6 * std::max(1.0, std::abs(p))) {
        c.location = (c.location * static_cast<double>(c.multiplicity) + p) / static_cast<double>(c.multiplicity + 1);
        ++c.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({p, 1, 0});
  }
  return out;
}

}  // namespace

bool zero_order(const ZeroRecord& a, const ZeroRecord& b) {
  const double ra = std::abs(a.location), rb = std::abs(b.location);
  if (ra != rb) return ra < rb;
  return std::arg(a.location) < std::arg(b.location);
}

cd winding_integral(const ExpPolyFunction& f, cd center, double radius) {
  auto integrand = [&](double t) {
    const cd e = std::polar(1.0, t);
    const cd z = center + radius * e;
    return f.log_derivative(z) * cd(0, radius) * e;
  };
  const auto res = integrate<cd>(integrand, 0.0, kTwoPi, 1e-8, 1e-10, 20000);
  if (!res.converged && !(res.error < kEdgeAcceptErr)) return {NAN, NAN};
  return res.value / cd(0, kTwoPi);
}

ZeroSearch find_zeros(const ExpPolyFunction& f, double r, const ZeroOptions& opts) {
  if (!(r > 0)) throw PreconditionError("zero search radius must be positive");
  if (f.is_zero()) throw PreconditionError("zero search on the zero function");
  const ExpPolyFunction g = f.cleared();

  // Square covering every candidate nudged radius.
  const double s = r * (1 + 1.5e-3) + 4 * opts.tol;
  // A zero on the square itself: enlarge slightly.
  Cell root{-s, -s, s, s};
  std::optional<int> w0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double h = s * std::pow(1 + 3.7e-4, attempt);
    root = Cell{-h, -h, h, h};
    if ((w0 = Search(g).winding(root))) break;
  }
  if (!w0) throw NumericError("winding integral around the search square is not integral");
  Search search(g);
  search.run(root, *w0, 1e-5 * std::max(1.0, s));

  std::vector<Cluster> all = search.found;
  std::vector<ZeroRecord> records;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double scale = std::max(1.0, std::abs(all[i].location));
    double rho = std::min({0.45 * nearest_other(all, i), all[i].half, 1e-4 * scale});
    rho = std::max(rho, 1e-12 * scale);
    ZeroRecord rec;
    rec.location = all[i].location;
    rec.multiplicity = all[i].multiplicity;
    rec.enclosure_radius = rho;
    rec.residual = std::abs(g(all[i].location));
    if (!std::isfinite(rec.residual)) rec.residual = std::exp(g.log_abs(all[i].location));
    records.push_back(rec);
  }

  // Boundary nudging.
  ZeroSearch out;
  out.requested_radius = r;
  auto clean = [&](double R) {
    for (const auto& z : records)
      if (std::abs(std::abs(z.location) - R) <= std::max(opts.tol, z.enclosure_radius)) return false;
    return true;
  };
  double R = r;
  if (!clean(R)) {
    bool done = false;
    for (int k = 0; k <= 20; ++k) {
      const double cand = r * (1 + std::ldexp(1e-3, -k));
      if (clean(cand)) {
        R = cand;
        out.nudge = k;
        done = true;
        break;
      }
    }
    if (!done) throw NumericError("a zero lies on |z| = " + std::to_string(r) + " for every nudged radius");
  }
  out.radius = R;

  if (opts.verify_enclosures) {
    for (const auto& z : records) {
      const cd w = winding_integral(g, z.location, z.enclosure_radius);
      if (!(std::abs(w - cd(z.multiplicity)) < kIntegralSlack))
        throw NumericError("enclosure winding disagrees with multiplicity");
    }
  }

  // Argument principle on the outer circle.
  const cd outer = winding_integral(g, 0, R);
  int inside = 0;
  for (const auto& z : records)
    if (std::abs(z.location) <= R) inside += z.multiplicity;
  if (!(std::abs(outer - cd(inside)) < kIntegralSlack))
    throw NumericError("outer winding " + std::to_string(outer.real()) + " disagrees with " +
                       std::to_string(inside) + " located zeros");
  out.outer_winding = inside;

  // A zero of den*f at a root of den cancels part of that pole.
  const auto poles = group_poles(f.poles());
  for (const auto& p : poles) {
    if (std::abs(p.location) > R) continue;
    int order = p.multiplicity;
    for (auto& z : records)
      if (z.multiplicity > 0 &&
          std::abs(p.location - z.location) <= std::max(opts.tol, 1e-6 * std::max(1.0, std::abs(p.location)))) {
        const int cancel = std::min(order, z.multiplicity);
        order -= cancel;
        z.multiplicity -= cancel;
        break;
      }
    if (order > 0) out.poles.push_back({p.location, order, opts.tol, 0.0});
  }
  for (const auto& z : records)
    if (std::abs(z.location) <= R && z.multiplicity > 0) out.zeros.push_back(z);
  std::sort(out.zeros.begin(), out.zeros.end(), zero_order);
  std::sort(out.poles.begin(), out.poles.end(), zero_order);
  return out;
}

std::vector<ZeroRecord> zeros_in_disk(const ExpPolyFunction& f, double r, double tol) {
  ZeroOptions o;
  o.tol = tol;
  return find_zeros(f, r, o).zeros;
}

}  // namespace expnev::numeric
