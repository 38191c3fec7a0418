#include "chowkit/loja.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "chowkit/certificates.hpp"

namespace chowkit {

NumericPoly::NumericPoly(const Polynomial& f) : nvars_(f.ring()->nvars()) {
  if (!f.field().is_rational()) throw std::invalid_argument("NumericPoly: rational coefficients required");
  for (auto& t : f.terms()) {
    std::vector<int> e(nvars_);
    for (int i = 0; i < nvars_; ++i) e[i] = t.m[i];
    terms_.push_back({std::move(e), Complex(t.c.get_d(), 0)});
  }
}

Complex NumericPoly::operator()(const CVec& x) const {
  Complex s = 0;
  for (auto& t : terms_) {
    Complex v = t.c;
    for (int i = 0; i < nvars_; ++i)
      if (t.e[i]) v *= std::pow(x[i], t.e[i]);
    s += v;
  }
  return s;
}

Complex NumericPoly::partial(const CVec& x, int var) const {
  Complex s = 0;
  for (auto& t : terms_) {
    if (t.e[var] == 0) continue;
    Complex v = t.c * double(t.e[var]);
    for (int i = 0; i < nvars_; ++i) {
      int e = i == var ? t.e[i] - 1 : t.e[i];
      if (e) v *= std::pow(x[i], e);
    }
    s += v;
  }
  return s;
}

namespace {

constexpr double kMinDistance = 1e-12;
constexpr int kOracleStarts = 16;
constexpr int kGridPoints = 3000;
constexpr uint64_t kGridSeed = 12345;

using RVec = std::vector<double>;
using Objective = std::function<double(const RVec&)>;

// Hooke-Jeeves pattern search.
RVec pattern_search(const Objective& f, RVec x, double step, double min_step, int max_evals) {
  double fx = f(x);
  int evals = 1;
  while (step > min_step && evals < max_evals) {
    bool improved = false;
    for (size_t i = 0; i < x.size() && evals < max_evals; ++i)
      for (double dir : {1.0, -1.0}) {
        RVec y = x;
        y[i] += dir * step;
        double fy = f(y);
        ++evals;
        if (fy < fx) {
          // extend along the successful move while it keeps paying off
          for (;;) {
            RVec z = y;
            z[i] += dir * step;
            double fz = f(z);
            ++evals;
            if (!(fz < fy) || evals >= max_evals) break;
            y = std::move(z), fy = fz;
          }
          x = std::move(y), fx = fy;
          improved = true;
          break;
        }
      }
    if (!improved) step /= 2;
  }
  return x;
}

CVec to_complex(const RVec& r, size_t offset, size_t n) {
  CVec out(n);
  for (size_t i = 0; i < n; ++i) out[i] = Complex(r[offset + 2 * i], r[offset + 2 * i + 1]);
  return out;
}

double norm(const CVec& v) {
  double s = 0;
  for (auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

struct Component {
  std::vector<NumericPoly> coords;
  int nparams = 0;
  double param_radius = 1;
  std::vector<std::pair<CVec, CVec>> grid;  // (t, phi(t)) covering the parameter disk

  // Search start for the nearest point: the closest grid point.
  const CVec& nearest_grid_param(const CVec& x) const {
    size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t g = 0; g < grid.size(); ++g) {
      double s = 0;
      for (size_t i = 0; i < x.size() && s < bd; ++i) s += std::norm(x[i] - grid[g].second[i]);
      if (s < bd) bd = s, best = g;
    }
    return grid[best].first;
  }

  double refine_distance(const CVec& x, const CVec& t, double step, int evals) const {
    Objective f = [&](const RVec& r) {
      CVec p = at(to_complex(r, 0, nparams));
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - p[i]);
      return s;
    };
    RVec r;
    for (auto& ti : t) r.push_back(ti.real()), r.push_back(ti.imag());
    return std::sqrt(f(pattern_search(f, r, step, 1e-15, evals)));
  }

  CVec at(const CVec& t) const {
    CVec p(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) p[i] = coords[i](t);
    return p;
  }

  // Unit vector from raw, orthogonal (hermitian) to the tangent space at t.
  CVec normal(const CVec& t, CVec raw) const {
    size_t n = coords.size();
    std::vector<Eigen::VectorXcd> basis;
    for (int j = 0; j < nparams; ++j) {
      Eigen::VectorXcd col(n);
      for (size_t i = 0; i < n; ++i) col[i] = coords[i].partial(t, j);
      for (auto& b : basis) col -= b.dot(col) * b;
      if (col.norm() > 1e-12) basis.push_back(col / col.norm());
    }
    Eigen::VectorXcd w(n);
    for (size_t i = 0; i < n; ++i) w[i] = raw[i];
    for (auto& b : basis) w -= b.dot(w) * b;
    double nw = w.norm();
    if (nw < 1e-14) return {};
    CVec out(n);
    for (size_t i = 0; i < n; ++i) out[i] = w[i] / nw;
    return out;
  }

};

class Evaluator {
 public:
  explicit Evaluator(const NumericScene& scene) {
    for (auto& I : scene.ideals)
      for (auto& g : I.generators()) gens_.emplace_back(g);
    if (gens_.empty()) throw std::invalid_argument("loja: no generators");
    n_ = gens_.front().nvars();
    if (static_cast<int>(scene.center.size()) != n_) throw std::invalid_argument("loja: center dimension");
    for (auto& p : scene.intersection) {
      if (static_cast<int>(p.coords.size()) != n_) throw std::invalid_argument("loja: parametrization dimension");
      Component c;
      c.nparams = p.coords.empty() ? 0 : p.coords.front().ring()->nvars();
      c.param_radius = p.param_radius;
      for (auto& q : p.coords) c.coords.emplace_back(q);
      if (c.nparams > 0) {
        std::mt19937_64 grng(kGridSeed);
        for (int g = 0; g < kGridPoints; ++g) {
          CVec t = random_params(c, grng);
          c.grid.push_back({t, c.at(t)});
        }
      }
      components_.push_back(std::move(c));
    }
  }

  int n() const { return n_; }
  bool parametrized() const { return !components_.empty(); }
  const std::vector<Component>& components() const { return components_; }

  double value(const CVec& x) const {
    double m = 0;
    for (auto& g : gens_) m = std::max(m, std::abs(g(x)));
    return m;
  }

  double squares(const CVec& x) const {
    double s = 0;
    for (auto& g : gens_) s += std::norm(g(x));
    return s;
  }

  CVec residuals(const CVec& x) const {
    CVec r;
    for (auto& g : gens_) r.push_back(g(x));
    return r;
  }

  std::optional<double> distance(const CVec& x, std::mt19937_64& rng, const CVec* hint = nullptr,
                                 int hint_component = -1) const {
    return parametrized() ? param_distance(x, rng, hint, hint_component) : penalty_distance(x, rng);
  }

  CVec random_params(const Component& c, std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> rad(0, 1), ang(0, 2 * M_PI);
    CVec t(c.nparams);
    for (auto& ti : t) ti = std::polar(c.param_radius * std::sqrt(rad(rng)), ang(rng));
    return t;
  }

  // Gauss-Newton with minimum-norm steps: lands on a nearby zero.
  std::optional<CVec> project(CVec y) const {
    int m = static_cast<int>(gens_.size());
    double prev = norm(residuals(y));
    for (int it = 0; it < 100 && prev > 1e-14; ++it) {
      Eigen::MatrixXcd J(m, n_);
      Eigen::VectorXcd F(m);
      for (int i = 0; i < m; ++i) {
        F[i] = gens_[i](y);
        for (int j = 0; j < n_; ++j) J(i, j) = gens_[i].partial(y, j);
      }
      Eigen::VectorXcd step = J.completeOrthogonalDecomposition().solve(F);
      double lambda = 1;
      for (;;) {
        CVec z = y;
        for (int j = 0; j < n_; ++j) z[j] -= lambda * step[j];
        double r = norm(residuals(z));
        if (r < prev || lambda < 1e-6) {
          y = std::move(z), prev = r;
          break;
        }
        lambda /= 2;
      }
    }
    if (!(prev <= 1e-10)) return std::nullopt;
    return y;
  }

 private:
  std::optional<double> param_distance(const CVec& x, std::mt19937_64& rng, const CVec* hint,
                                       int hint_component) const {
    double best = std::numeric_limits<double>::infinity();
    for (size_t ci = 0; ci < components_.size(); ++ci) {
      const Component& c = components_[ci];
      if (c.nparams == 0) {
        CVec p = c.at({});
        CVec d(n_);
        for (int i = 0; i < n_; ++i) d[i] = x[i] - p[i];
        best = std::min(best, norm(d));
        continue;
      }
      Objective f = [&](const RVec& r) {
        CVec p = c.at(to_complex(r, 0, c.nparams));
        double s = 0;
        for (int i = 0; i < n_; ++i) s += std::norm(x[i] - p[i]);
        return s;
      };
      std::vector<CVec> starts;
      if (hint && static_cast<int>(ci) == hint_component) starts.push_back(*hint);
      starts.push_back(c.nearest_grid_param(x));
      while (static_cast<int>(starts.size()) < kOracleStarts) starts.push_back(random_params(c, rng));
      for (auto& t : starts) {
        RVec r;
        for (auto& ti : t) r.push_back(ti.real()), r.push_back(ti.imag());
        r = pattern_search(f, r, 0.05, 1e-15, 20000);
        best = std::min(best, std::sqrt(f(r)));
      }
    }
    if (!std::isfinite(best)) return std::nullopt;
    return best;
  }

  std::optional<double> penalty_distance(const CVec& x, std::mt19937_64& rng) const {
    std::normal_distribution<double> g(0, 1);
    std::optional<double> best;
    auto first = project(x);
    double scale = 0.1;
    if (first) {
      CVec d(n_);
      for (int i = 0; i < n_; ++i) d[i] = x[i] - (*first)[i];
      best = norm(d);
      scale = std::max(*best, 1e-12);
    }
    for (int s = 1; s < kOracleStarts; ++s) {
      CVec y = x;
      for (auto& yi : y) yi += scale * Complex(g(rng), g(rng));
      auto z = project(y);
      if (!z) continue;
      CVec d(n_);
      for (int i = 0; i < n_; ++i) d[i] = x[i] - (*z)[i];
      double dist = norm(d);
      if (!best || dist < *best) best = dist;
    }
    return best;
  }

  std::vector<NumericPoly> gens_;
  std::vector<Component> components_;
  int n_ = 0;
};

CVec random_direction(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0, 1);
  CVec w(n);
  for (auto& wi : w) wi = Complex(g(rng), g(rng));
  double nw = norm(w);
  for (auto& wi : w) wi /= nw;
  return w;
}

double box_distance(const CVec& p, const CVec& c) {
  CVec d(p.size());
  for (size_t i = 0; i < p.size(); ++i) d[i] = p[i] - c[i];
  return norm(d);
}

struct ShellPoint {
  int component = -1;
  CVec t;
  CVec x;
  double value = std::numeric_limits<double>::infinity();
};

// x = phi(t) + r w with w normal at t; the search runs over (t, raw w).
ShellPoint minimize_on_shell(const Evaluator& ev, const NumericScene& scene, double r, std::mt19937_64& rng) {
  int n = ev.n();
  ShellPoint best;
  for (size_t ci = 0; ci < ev.components().size(); ++ci) {
    const Component& c = ev.components()[ci];
    auto point = [&](const RVec& v, CVec& t) -> std::optional<CVec> {
      t = to_complex(v, 0, c.nparams);
      for (auto& ti : t)
        if (std::abs(ti) > c.param_radius) return std::nullopt;
      CVec p = c.at(t);
      if (box_distance(p, scene.center) > scene.radius) return std::nullopt;
      CVec raw = to_complex(v, 2 * c.nparams, n);
      // the direction is scale invariant; pin the raw length so the search
      // cannot drift along the ray
      double len = norm(raw);
      if (len < 0.5 || len > 2) return std::nullopt;
      CVec w = c.normal(t, raw);
      if (w.empty()) return std::nullopt;
      for (int i = 0; i < n; ++i) p[i] += r * w[i];
      return p;
    };
    Objective f = [&](const RVec& v) {
      CVec t;
      auto x = point(v, t);
      if (!x) return std::numeric_limits<double>::infinity();
      // near singular points a normal offset can fold back onto another
      // branch of the component; such points are not on the shell
      if (c.nparams > 0 && c.refine_distance(*x, c.nearest_grid_param(*x), r, 200) < 0.5 * r)
        return std::numeric_limits<double>::infinity();
      // smooth stand-in for the max, same order of magnitude
      return std::log(ev.squares(*x) + 1e-300);
    };
    std::vector<std::pair<double, RVec>> starts;
    for (int s = 0; s < scene.per_shell; ++s) {
      RVec v;
      for (auto& ti : ev.random_params(c, rng)) v.push_back(ti.real()), v.push_back(ti.imag());
      for (auto& wi : random_direction(n, rng)) v.push_back(wi.real()), v.push_back(wi.imag());
      starts.push_back({f(v), v});
    }
    std::sort(starts.begin(), starts.end(), [](auto& a, auto& b) { return a.first < b.first; });
    int kept = 0;
    for (size_t s = 0; s < starts.size() && kept < 4; ++s) {
      if (!std::isfinite(starts[s].first)) continue;
      RVec v = pattern_search(f, starts[s].second, 0.25, 1e-10, 6000);
      CVec t;
      auto x = point(v, t);
      if (!x) continue;
      auto d = ev.distance(*x, rng, &t, static_cast<int>(ci));
      if (!d || *d < 0.5 * r) continue;
      ++kept;
      double val = ev.value(*x);
      if (val < best.value) best = {static_cast<int>(ci), t, *x, val};
    }
  }
  return best;
}

// Penalty mode has no parametrization: projected base points with free
// offset directions, refined like the parametrized case.
ShellPoint sample_shell(const Evaluator& ev, const NumericScene& scene, double r, std::mt19937_64& rng) {
  int n = ev.n();
  struct Start {
    double value;
    CVec base;
    RVec v;
  };
  std::vector<Start> starts;
  for (int s = 0; s < scene.per_shell; ++s) {
    CVec y = scene.center;
    CVec w = random_direction(n, rng);
    for (int i = 0; i < n; ++i) y[i] += 0.5 * scene.radius * w[i];
    auto p = ev.project(y);
    if (!p || box_distance(*p, scene.center) > scene.radius) continue;
    RVec v;
    for (auto& wi : random_direction(n, rng)) v.push_back(wi.real()), v.push_back(wi.imag());
    starts.push_back({std::numeric_limits<double>::infinity(), *p, v});
  }
  auto point = [&](const CVec& base, const RVec& v) -> std::optional<CVec> {
    CVec raw = to_complex(v, 0, n);
    double len = norm(raw);
    if (len < 0.5 || len > 2) return std::nullopt;
    CVec x = base;
    for (int i = 0; i < n; ++i) x[i] += r * raw[i] / len;
    return x;
  };
  for (auto& st : starts) st.value = ev.squares(*point(st.base, st.v));
  std::sort(starts.begin(), starts.end(), [](auto& a, auto& b) { return a.value < b.value; });
  ShellPoint best;
  int kept = 0;
  for (size_t s = 0; s < starts.size() && kept < 4; ++s) {
    const CVec& base = starts[s].base;
    Objective f = [&](const RVec& v) {
      auto x = point(base, v);
      if (!x) return std::numeric_limits<double>::infinity();
      auto z = ev.project(*x);
      if (z && box_distance(*x, *z) < 0.5 * r) return std::numeric_limits<double>::infinity();
      return std::log(ev.squares(*x) + 1e-300);
    };
    RVec v = pattern_search(f, starts[s].v, 0.25, 1e-10, 3000);
    auto x = point(base, v);
    if (!x) continue;
    auto d = ev.distance(*x, rng);
    if (!d || *d < 0.5 * r) continue;
    ++kept;
    double val = ev.value(*x);
    if (val < best.value) best = {-1, {}, *x, val};
  }
  return best;
}

}  // namespace

std::optional<double> scene_distance(const NumericScene& scene, const CVec& x) {
  Evaluator ev(scene);
  std::mt19937_64 rng(scene.seed);
  return ev.distance(x, rng);
}

ExponentEstimate estimate_exponent(const NumericScene& scene) {
  Evaluator ev(scene);
  std::mt19937_64 rng(scene.seed);
  ExponentEstimate est;
  est.D = 1;
  for (auto& I : scene.ideals) est.D *= bound_degree(I);

  for (auto& c : ev.components())
    for (int s = 0; s < 8; ++s) {
      CVec p = c.at(ev.random_params(c, rng));
      for (auto& r : ev.residuals(p))
        if (std::abs(r) > 1e-9) throw std::invalid_argument("loja: parametrization leaves the zero set");
    }

  int attempts = 0;
  for (int k = 1; k <= scene.shells; ++k) {
    double r = std::pow(10.0, -k);
    ShellPoint sp = ev.parametrized() ? minimize_on_shell(ev, scene, r, rng) : sample_shell(ev, scene, r, rng);
    ++attempts;
    if (!std::isfinite(sp.value)) {
      ++est.oracle_failures;
      continue;
    }
    auto d = ev.distance(sp.x, rng, sp.component >= 0 ? &sp.t : nullptr, sp.component);
    if (!d) {
      ++est.oracle_failures;
      continue;
    }
    if (*d < kMinDistance || sp.value <= 0) {
      ++est.excluded;
      continue;
    }
    est.samples.push_back({r, *d, sp.value});
  }
  if (est.oracle_failures * 10 > attempts) throw OracleFailure("loja: distance oracle failed on more than 10% of shells");
  if (est.samples.size() < 2) throw OracleFailure("loja: fewer than two usable shells");

  int m = static_cast<int>(est.samples.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    A(i, 0) = std::log10(est.samples[i].distance);
    A(i, 1) = 1;
    y[i] = std::log10(est.samples[i].value);
  }
  Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
  est.slope = beta[0];
  double se = 0;
  if (m > 2) {
    double ssr = (A * beta - y).squaredNorm();
    double mean = A.col(0).mean();
    double sxx = (A.col(0).array() - mean).square().sum();
    se = std::sqrt(ssr / (m - 2) / sxx);
  }
  est.band_low = est.slope - 2 * se;
  est.band_high = est.slope + 2 * se;
  est.within_bound = est.slope <= est.D + est.tolerance;
  return est;
}

UpperChainReport verify_upper_chain(const NumericScene& scene, const std::vector<Polynomial>& fs) {
  Evaluator ev(scene);
  std::mt19937_64 rng(scene.seed);
  std::vector<NumericPoly> nf;
  for (auto& f : fs) nf.emplace_back(f);
  UpperChainReport rep;
  int n = ev.n();
  int failures = 0, attempts = 0;
  for (int k = 1; k <= scene.shells; ++k) {
    double r = std::pow(10.0, -k);
    for (int s = 0; s < std::max(1, scene.per_shell / 8); ++s) {
      ++attempts;
      CVec x;
      CVec t;
      int comp = -1;
      if (ev.parametrized()) {
        comp = static_cast<int>(rng() % ev.components().size());
        auto& c = ev.components()[comp];
        t = ev.random_params(c, rng);
        x = c.at(t);
      } else {
        CVec y = scene.center;
        CVec w = random_direction(n, rng);
        for (int i = 0; i < n; ++i) y[i] += 0.5 * scene.radius * w[i];
        auto p = ev.project(y);
        if (!p) {
          ++failures;
          continue;
        }
        x = *p;
      }
      CVec w = random_direction(n, rng);
      for (int i = 0; i < n; ++i) x[i] += r * w[i];
      auto d = ev.distance(x, rng, comp >= 0 ? &t : nullptr, comp);
      if (!d) {
        ++failures;
        continue;
      }
      if (*d < kMinDistance) continue;
      double v = 0;
      for (auto& f : nf) v = std::max(v, std::abs(f(x)));
      rep.constant = std::max(rep.constant, v / *d);
      ++rep.samples;
    }
  }
  if (failures * 10 > attempts) throw OracleFailure("loja: distance oracle failed on more than 10% of samples");
  rep.bounded = std::isfinite(rep.constant);
  return rep;
}

}  // namespace chowkit
