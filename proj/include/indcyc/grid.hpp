#pragma once

// Dense grid maximisation over a box, with a serial reference and an OpenMP
// kernel that must agree with it bit for bit. Objectives return NaN outside
// their feasible set.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indcyc::grid {

inline constexpr std::size_t kMaxDims = 6;
using Point = std::array<double, kMaxDims>;

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  std::size_t dims() const { return lo.size(); }
};

/// Axis d holds count[d] points lo + i * step[d]; the last one is hi.
struct Lattice {
  Box box;
  std::vector<std::size_t> count;
  std::vector<double> step;
  std::uint64_t size = 1;

  Lattice(Box b, double resolution) : box(std::move(b)) {
    if (box.dims() == 0 || box.dims() > kMaxDims || box.hi.size() != box.dims()) {
      throw std::invalid_argument("grid box must have 1..6 matching dimensions");
    }
    if (!(resolution > 0)) throw std::invalid_argument("grid resolution must be positive");
    for (std::size_t d = 0; d < box.dims(); ++d) {
      const double width = box.hi[d] - box.lo[d];
      if (!(width >= 0)) throw std::invalid_argument("grid box is empty");
      const auto cells = static_cast<std::size_t>(std::ceil(width / resolution - 1e-9));
      count.push_back(cells + 1);
      step.push_back(cells == 0 ? 0.0 : width / static_cast<double>(cells));
      size *= count.back();
    }
  }

  std::size_t dims() const { return box.dims(); }

  double coord(std::size_t d, std::size_t i) const {
    return i + 1 == count[d] ? box.hi[d] : box.lo[d] + static_cast<double>(i) * step[d];
  }

  /// Row-major: the first axis varies slowest.
  void unflatten(std::uint64_t flat, std::array<std::size_t, kMaxDims>& idx) const {
    for (std::size_t d = dims(); d-- > 0;) {
      idx[d] = static_cast<std::size_t>(flat % count[d]);
      flat /= count[d];
    }
  }

  Point point(std::uint64_t flat) const {
    std::array<std::size_t, kMaxDims> idx{};
    unflatten(flat, idx);
    Point p{};
    for (std::size_t d = 0; d < dims(); ++d) p[d] = coord(d, idx[d]);
    return p;
  }

  /// Half the cell diagonal: every box point lies this close to a grid point.
  double covering_radius() const {
    double s = 0;
    for (double h : step) s += 0.25 * h * h;
    return std::sqrt(s);
  }
};

struct GridMax {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t flat = 0;  // smallest flat index among ties
  std::uint64_t feasible = 0;
  bool found = false;

  void offer(double v, std::uint64_t i) {
    if (std::isnan(v)) return;
    ++feasible;
    if (!found || v > value || (v == value && i < flat)) {
      value = v;
      flat = i;
      found = true;
    }
  }
  void merge(const GridMax& o) {
    if (!o.found) return;
    feasible += o.feasible;
    if (!found || o.value > value || (o.value == value && o.flat < flat)) {
      value = o.value;
      flat = o.flat;
      found = true;
    }
  }
};

template <class F>
double eval(const F& f, const Point& p, std::size_t dims) {
  return f(std::span<const double>(p.data(), dims));
}

template <class F>
GridMax maximize_serial(const F& f, const Lattice& lat) {
  GridMax best;
  for (std::uint64_t i = 0; i < lat.size; ++i) best.offer(eval(f, lat.point(i), lat.dims()), i);
  return best;
}

inline int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

template <class F>
GridMax maximize(const F& f, const Lattice& lat, int threads = 1) {
  const int nt = resolve_threads(threads);
  std::vector<GridMax> local(static_cast<std::size_t>(nt));
  const auto total = static_cast<std::int64_t>(lat.size);
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    GridMax& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#else
    GridMax& mine = local[0];
#endif
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      mine.offer(eval(f, lat.point(u), lat.dims()), u);
    }
  }
  GridMax best;
  for (const auto& g : local) best.merge(g);
  return best;
}

/// Central difference, falling back to one-sided differences where a probe
/// leaves the feasible set. Degenerate axes report 0.
template <class F>
std::vector<double> gradient(const F& f, const Point& x, const Box& box, double h = 1e-6) {
  std::vector<double> g(box.dims(), 0.0);
  const double fx = eval(f, x, box.dims());
  for (std::size_t d = 0; d < box.dims(); ++d) {
    if (box.hi[d] == box.lo[d]) continue;
    Point a = x;
    Point b = x;
    a[d] += h;
    b[d] -= h;
    const bool ina = a[d] <= box.hi[d];
    const bool inb = b[d] >= box.lo[d];
    const double fa = ina ? eval(f, a, box.dims()) : std::nan("");
    const double fb = inb ? eval(f, b, box.dims()) : std::nan("");
    if (!std::isnan(fa) && !std::isnan(fb)) {
      g[d] = (fa - fb) / (2 * h);
    } else if (!std::isnan(fa)) {
      g[d] = (fa - fx) / h;
    } else if (!std::isnan(fb)) {
      g[d] = (fx - fb) / h;
    }
  }
  return g;
}

inline double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct Smoothness {
  double gradient_bound = 0;  // sup |grad f|, sampled, times safety
  double hessian_bound = 0;   // sup |Hess f|_F, sampled, times safety
};

/// Sampled derivative bounds on a coarse sub-lattice, inflated by `safety`.
/// Second derivatives come from differences of f whose probes are all
/// feasible; entries with an infeasible probe are skipped.
template <class F>
Smoothness estimate_smoothness(const F& f, const Box& box, std::uint64_t max_samples = 200000,
                               double safety = 2.0) {
  std::size_t live = 0;
  for (std::size_t d = 0; d < box.dims(); ++d) live += box.hi[d] > box.lo[d] ? 1 : 0;
  std::size_t per_axis = 24;
  while (per_axis > 4 && std::pow(static_cast<double>(per_axis), static_cast<double>(live)) >
                             static_cast<double>(max_samples)) {
    --per_axis;
  }
  Lattice coarse(box, 1.0);
  for (std::size_t d = 0; d < box.dims(); ++d) {
    const double width = box.hi[d] - box.lo[d];
    coarse.count[d] = width > 0 ? per_axis : 1;
    coarse.step[d] = width > 0 ? width / static_cast<double>(per_axis - 1) : 0.0;
  }
  coarse.size = 1;
  for (std::size_t c : coarse.count) coarse.size *= c;

  const std::size_t n = box.dims();
  auto shifted = [&](const Point& p, std::size_t d, double hd, std::size_t e, double he, double& out) {
    Point q = p;
    q[d] += hd;
    q[e] += he;
    if (q[d] < box.lo[d] || q[d] > box.hi[d] || q[e] < box.lo[e] || q[e] > box.hi[e]) return false;
    out = eval(f, q, n);
    return !std::isnan(out);
  };

  Smoothness s;
  constexpr double h = 1e-3;
  for (std::uint64_t i = 0; i < coarse.size; ++i) {
    Point p = coarse.point(i);
    // Pull samples off the faces so that centred differences fit in the box.
    for (std::size_t d = 0; d < n; ++d) {
      if (box.hi[d] - box.lo[d] > 4 * h) p[d] = std::clamp(p[d], box.lo[d] + h, box.hi[d] - h);
    }
    const double fp = eval(f, p, n);
    if (std::isnan(fp)) continue;
    s.gradient_bound = std::max(s.gradient_bound, norm(gradient(f, p, box, 1e-6)));
    double frob = 0;
    for (std::size_t d = 0; d < n; ++d) {
      if (box.hi[d] == box.lo[d]) continue;
      for (std::size_t e = d; e < n; ++e) {
        if (box.hi[e] == box.lo[e]) continue;
        double a = 0, b = 0, c = 0, k = 0;
        double hde = 0;
        if (d == e) {
          if (!shifted(p, d, h, d, 0, a) || !shifted(p, d, -h, d, 0, b)) continue;
          hde = (a - 2 * fp + b) / (h * h);
        } else {
          if (!shifted(p, d, h, e, h, a) || !shifted(p, d, h, e, -h, b) || !shifted(p, d, -h, e, h, c) ||
              !shifted(p, d, -h, e, -h, k)) {
            continue;
          }
          hde = (a - b - c + k) / (4 * h * h);
        }
        frob += (d == e ? 1 : 2) * hde * hde;
      }
    }
    s.hessian_bound = std::max(s.hessian_bound, std::sqrt(frob));
  }
  s.gradient_bound *= safety;
  s.hessian_bound *= safety;
  return s;
}

struct Certificate {
  double upper = 0;
  double radius = 0;
  Smoothness smoothness;
  std::uint64_t candidates = 0;
};

/// Upper bound on sup f over the box from the grid values. A box point x has
/// a nearest grid point p with x - p in the half cell clipped to the box, so
///   f(x) <= f(p) + max over that half cell of grad f(p).(x - p) + H r^2 / 2
/// with r the covering radius. Only grid points with f(p) + L r >= grid max
/// can matter.
template <class F>
Certificate certify(const F& f, const Lattice& lat, const GridMax& gm, int threads = 1) {
  Certificate c;
  c.smoothness = estimate_smoothness(f, lat.box);
  c.radius = lat.covering_radius();
  c.upper = gm.value;
  const double cutoff = gm.value - c.smoothness.gradient_bound * c.radius;
  const double r = c.radius;
  const double H = c.smoothness.hessian_bound;
  const auto total = static_cast<std::int64_t>(lat.size);
  double upper = gm.value;
  std::uint64_t candidates = 0;
#pragma omp parallel for reduction(max : upper) reduction(+ : candidates) \
    num_threads(resolve_threads(threads)) schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    const Point p = lat.point(static_cast<std::uint64_t>(i));
    const double v = eval(f, p, lat.dims());
    if (std::isnan(v) || v < cutoff) continue;
    ++candidates;
    const auto g = gradient(f, p, lat.box);
    double linear = 0;
    for (std::size_t d = 0; d < lat.dims(); ++d) {
      const double down = std::max(lat.box.lo[d], p[d] - 0.5 * lat.step[d]) - p[d];
      const double up = std::min(lat.box.hi[d], p[d] + 0.5 * lat.step[d]) - p[d];
      linear += std::max(g[d] * down, g[d] * up);
    }
    const double bound = v + linear + 0.5 * H * r * r;
    upper = std::max(upper, bound);
  }
  c.upper = upper;
  c.candidates = candidates;
  return c;
}

/// Golden-section search for the maximum of t -> f(x with x[axis] = t) on
/// [a, b]; infeasible probes count as -inf.
template <class F>
double golden_axis(const F& f, Point& x, std::size_t dims, std::size_t axis, double a, double b) {
  auto at = [&](double t) {
    Point q = x;
    q[axis] = t;
    const double v = eval(f, q, dims);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  const double invphi = 1.0 / std::numbers::phi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = at(c);
  double fd = at(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = at(d);
    }
  }
  // Never move to a worse point than the current one or the bracket ends.
  double best_t = x[axis];
  double best_v = at(best_t);
  for (double t : {a, b, 0.5 * (a + b), c, d}) {
    const double v = at(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  x[axis] = best_t;
  return best_v;
}

struct Refined {
  Point x{};
  double value = 0;
  int sweeps = 0;
};

/// Coordinate-wise golden-section ascent inside a window of `window` cells
/// around the starting point, repeated until a sweep gains less than `tol`.
template <class F>
Refined refine(const F& f, const Lattice& lat, Point start, double tol = 1e-13, int max_sweeps = 5000,
               double window = 2.0) {
  Refined r;
  r.x = start;
  r.value = eval(f, start, lat.dims());
  int quiet = 0;
  for (r.sweeps = 0; r.sweeps < max_sweeps; ++r.sweeps) {
    const double before = r.value;
    for (std::size_t d = 0; d < lat.dims(); ++d) {
      if (lat.step[d] == 0) continue;
      const double w = window * lat.step[d];
      const double a = std::max(lat.box.lo[d], r.x[d] - w);
      const double b = std::min(lat.box.hi[d], r.x[d] + w);
      r.value = golden_axis(f, r.x, lat.dims(), d, a, b);
    }
    if (r.value - before < tol) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  return r;
}

/// Grid points strictly greater than all 2d axis neighbours, excluding
/// points on a face of the box. A box with a degenerate axis has no interior.
template <class F>
std::uint64_t interior_strict_local_maxima(const F& f, const Lattice& lat, int threads = 1) {
  for (std::size_t c : lat.count) {
    if (c < 3) return 0;
  }
  const auto total = static_cast<std::int64_t>(lat.size);
  std::uint64_t found = 0;
#pragma omp parallel for reduction(+ : found) num_threads(resolve_threads(threads)) schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    std::array<std::size_t, kMaxDims> idx{};
    lat.unflatten(static_cast<std::uint64_t>(i), idx);
    bool interior = true;
    for (std::size_t d = 0; d < lat.dims(); ++d) {
      if (idx[d] == 0 || idx[d] + 1 == lat.count[d]) interior = false;
    }
    if (!interior) continue;
    const Point p = lat.point(static_cast<std::uint64_t>(i));
    const double v = eval(f, p, lat.dims());
    if (std::isnan(v)) continue;
    bool strict = true;
    for (std::size_t d = 0; d < lat.dims() && strict; ++d) {
      for (int s : {-1, 1}) {
        Point q = p;
        q[d] = lat.coord(d, static_cast<std::size_t>(static_cast<long long>(idx[d]) + s));
        const double w = eval(f, q, lat.dims());
        if (std::isnan(w) || !(v > w)) {
          strict = false;
          break;
        }
      }
    }
    if (strict) ++found;
  }
  return found;
}

}  // namespace indcyc::grid
