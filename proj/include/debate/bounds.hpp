// Copyright 2026 The debate-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Closed-form error bounds for the randomized policy families, binomial
// tail bounds, and a parameter search for the ladder bound.
//
// The ladder bound for highlight policies, with r = m/n > 1, alpha in
// (0, 1], a non-increasing ladder (mu_i) in (0, 1] and a non-decreasing
// ladder (nu_j) with nu_1 >= alpha / log2(r):
//
//   theta_ij = exp(-mu_i * alpha * r^(1 - nu_j))
//   zeta_i   = exp(-alpha r) (e / mu_i)^(mu_i alpha r),   zeta_0 = 1
//   xi_j     = exp(-alpha) r^(-nu_j log2(nu_j log2(r) / (e alpha))), xi_0 = 1
//   bound    = sum_ij theta_ij zeta_{i-1} xi_{j-1} + zeta_k + xi_l + eps
//
// Everything is computed in log space: the zeta terms underflow doubles
// long before the bound itself stops being meaningful.

#ifndef DEBATE_BOUNDS_HPP
#define DEBATE_BOUNDS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "debate/game.hpp"

namespace debate {

struct BoundParams {
  double r = 0.0;      // availability ratio m/n, > 1
  double eps = 0.0;    // probability mass violating the (m, n) cutoffs
  double alpha = 1.0;  // marking intensity, beta = alpha / n
  std::vector<double> mu, nu;
};

inline std::vector<std::string> validate(const BoundParams& p) {
  std::vector<std::string> out;
  if (!(p.r > 1.0)) out.push_back("r must be > 1");
  if (!(p.eps >= 0.0 && p.eps <= 1.0)) out.push_back("eps must lie in [0, 1]");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) out.push_back("alpha must lie in (0, 1]");
  if (p.mu.empty()) out.push_back("mu must be nonempty (k >= 1)");
  if (p.nu.empty()) out.push_back("nu must be nonempty (l >= 1)");
  for (size_t i = 0; i < p.mu.size(); ++i) {
    if (!(p.mu[i] > 0.0 && p.mu[i] <= 1.0)) {
      out.push_back("mu[" + std::to_string(i + 1) + "] must lie in (0, 1]");
      break;
    }
    if (i > 0 && p.mu[i] > p.mu[i - 1] + 1e-15) {
      out.push_back("mu must be non-increasing");
      break;
    }
  }
  if (!p.nu.empty() && p.r > 1.0 && p.alpha > 0.0) {
    double floor = p.alpha / std::log2(p.r);
    if (p.nu.front() < floor - 1e-12)
      out.push_back("nu[1] must be >= alpha / log2(r) = " + fmt17(floor));
    for (size_t j = 1; j < p.nu.size(); ++j)
      if (p.nu[j] < p.nu[j - 1] - 1e-15) {
        out.push_back("nu must be non-decreasing");
        break;
      }
  }
  return out;
}

namespace detail {

// Exponents of the Chernoff tails, in the substituted coordinates
// x = mu * alpha * r (lower tail) and y = nu * log2(r) (upper tail).
inline double ln_lower_tail(double x, double ar) {
  if (x <= 0.0) return -ar;
  return -ar + x * (1.0 + std::log(ar) - std::log(x));
}

inline double ln_upper_tail(double y, double alpha) {
  if (y <= 0.0) return -alpha;
  return -alpha - y * std::log(y / (std::numbers::e * alpha));
}

inline double ladder_bound(const std::vector<double>& xs,
                           const std::vector<double>& ys, double alpha,
                           double r, double eps) {
  const double ar = alpha * r;
  double total = std::exp(ln_lower_tail(xs.back(), ar)) +
                 std::exp(ln_upper_tail(ys.back(), alpha)) + eps;
  double lz = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) lz = ln_lower_tail(xs[i - 1], ar);
    double lx = 0.0;
    for (size_t j = 0; j < ys.size(); ++j) {
      if (j > 0) lx = ln_upper_tail(ys[j - 1], alpha);
      total += std::exp(-xs[i] * std::exp2(-ys[j]) + lz + lx);
    }
  }
  return total;
}

}  // namespace detail

inline double highlight_error_bound(const BoundParams& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw InputError("bound params: " + violations.front());
  const double log2r = std::log2(p.r);
  std::vector<double> xs(p.mu.size()), ys(p.nu.size());
  for (size_t i = 0; i < p.mu.size(); ++i) xs[i] = p.mu[i] * p.alpha * p.r;
  for (size_t j = 0; j < p.nu.size(); ++j) ys[j] = p.nu[j] * log2r;
  return detail::ladder_bound(xs, ys, p.alpha, p.r, p.eps);
}

// The single-rung instantiation alpha = 1, mu = nu = 1/2, valid for r >= 4;
// decays faster than the reciprocal of any polynomial in r.
inline double highlight_error_bound_simple(double r) {
  if (!(r >= 4.0)) throw InputError("r must be >= 4");
  BoundParams p;
  p.r = r;
  p.eps = 0.0;
  p.alpha = 1.0;
  p.mu = {0.5};
  p.nu = {0.5};
  return highlight_error_bound(p);
}

// Expected loser share of available actions; attained exactly by the
// ranking-policy family.
inline double ranking_error_bound(const Ckddg& b) {
  require_valid(b);
  double total = 0.0;
  for (const auto& s : b.scenarios) {
    double w = static_cast<double>(s.avail_winner.size());
    double l = static_cast<double>(s.avail_loser.size());
    total += s.prob * (w + l == 0.0 ? 0.5 : l / (w + l));
  }
  return total;
}

// Error floor n / (2m) for the private-information family built on nested
// subsets; no policy beats it.
inline double piddg_error_floor(int m, int n) {
  if (n < 1 || m < n) throw InputError("need m >= n >= 1");
  return static_cast<double>(n) / (2.0 * m);
}

// Common-knowledge analogue (2n - m) / (2m); may be non-positive, in which
// case it is vacuous and deliberately not clamped.
inline double ckddg_error_floor(int m, int n) {
  if (n < 1 || m < n) throw InputError("need m >= n >= 1");
  return (2.0 * n - m) / (2.0 * m);
}

// Chernoff bound on P[X <= x] for X ~ Binomial(trials, beta), valid for
// 0 < x <= beta * trials.
inline double binomial_lower_tail_bound(int trials, double beta, double x) {
  if (trials < 1) throw InputError("trials must be >= 1");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("beta must lie in [0, 1]");
  const double bt = beta * trials;
  if (!(x > 0.0) || x > bt * (1.0 + 1e-12))
    throw InputError("x must lie in (0, beta * trials]");
  return std::exp(detail::ln_lower_tail(std::min(x, bt), bt));
}

// Chernoff bound on P[Y >= y] for Y ~ Binomial(trials, beta), valid for
// y >= beta * trials.
inline double binomial_upper_tail_bound(int trials, double beta, double y) {
  if (trials < 1) throw InputError("trials must be >= 1");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("beta must lie in [0, 1]");
  const double bt = beta * trials;
  if (y < bt * (1.0 - 1e-12)) throw InputError("y must be >= beta * trials");
  if (y <= 0.0) return std::exp(-bt);
  return std::exp(-bt + y * (1.0 + (bt > 0.0 ? std::log(bt) : -1e308) - std::log(y)));
}

struct OptimizeResult {
  BoundParams params;
  double bound = 0.0;
  bool target_met = true;  // false only when a target was given and missed
};

namespace detail {

class LadderSearch {
 public:
  LadderSearch(double r, double alpha, double eps, long* evals, long budget)
      : r_(r), alpha_(alpha), eps_(eps), ar_(alpha * r), evals_(evals),
        budget_(budget) {}

  double eval(const std::vector<double>& xs, const std::vector<double>& ys) {
    ++*evals_;
    return ladder_bound(xs, ys, alpha_, r_, eps_);
  }

  bool exhausted() const { return *evals_ > budget_; }

  // Golden-section scan of one coordinate within [lo, hi].
  template <typename F>
  std::pair<double, double> line_min(F&& f, double lo, double hi) {
    if (hi <= lo) return {f(lo), lo};
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 40; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = f(d);
      }
    }
    double m = 0.5 * (a + b);
    return {f(m), m};
  }

  double refine(std::vector<double>* xs, std::vector<double>* ys, int rounds) {
    double best = eval(*xs, *ys);
    for (int round = 0; round < rounds && !exhausted(); ++round) {
      bool improved = false;
      for (size_t i = 0; i < xs->size(); ++i) {
        double hi = i > 0 ? (*xs)[i - 1] : ar_;
        double lo = i + 1 < xs->size() ? (*xs)[i + 1] : 1e-9 * ar_;
        auto [v, x] = line_min(
            [&](double t) {
              double saved = (*xs)[i];
              (*xs)[i] = t;
              double out = eval(*xs, *ys);
              (*xs)[i] = saved;
              return out;
            },
            lo, hi);
        if (v < best - 1e-18) {
          best = v;
          (*xs)[i] = x;
          improved = true;
        }
      }
      for (size_t j = 0; j < ys->size(); ++j) {
        double lo = j > 0 ? (*ys)[j - 1] : alpha_;
        double hi = j + 1 < ys->size() ? (*ys)[j + 1]
                                       : std::max(60.0, (*ys)[j] * 3.0);
        auto [v, y] = line_min(
            [&](double t) {
              double saved = (*ys)[j];
              (*ys)[j] = t;
              double out = eval(*xs, *ys);
              (*ys)[j] = saved;
              return out;
            },
            lo, hi);
        if (v < best - 1e-18) {
          best = v;
          (*ys)[j] = y;
          improved = true;
        }
      }
      if (!improved) break;
    }
    return best;
  }

  // Greedy ladder growth: append a rung to whichever ladder helps more,
  // until the marginal relative improvement drops below 1e-3.
  double run(std::vector<double>* xs, std::vector<double>* ys) {
    *xs = {ar_};
    *ys = {alpha_};
    double best = refine(xs, ys, 6);
    while (static_cast<int>(xs->size() + ys->size()) < 40 && !exhausted()) {
      auto xs_grow = *xs;
      auto ys_keep = *ys;
      xs_grow.push_back(xs_grow.back() * 0.5);
      double vx = refine(&xs_grow, &ys_keep, 3);

      auto xs_keep = *xs;
      auto ys_grow = *ys;
      ys_grow.push_back(ys_grow.back() * 1.5 + 0.5);
      double vy = refine(&xs_keep, &ys_grow, 3);

      double v = std::min(vx, vy);
      if (!(v < best * (1.0 - 1e-3))) break;
      if (vx <= vy) {
        *xs = xs_grow;
        *ys = ys_keep;
      } else {
        *xs = xs_keep;
        *ys = ys_grow;
      }
      best = v;
    }
    return refine(xs, ys, 10);
  }

 private:
  double r_, alpha_, eps_, ar_;
  long* evals_;
  long budget_;
};

}  // namespace detail

// Coordinate-descent search for ladder parameters: alpha over a log grid,
// greedy rung growth, then cyclic golden-section refinement.  With a target,
// stops as soon as some alpha achieves it.  `budget` caps the number of
// bound evaluations (0 picks a default suited to interactive use).
inline OptimizeResult optimize_highlight_bound(
    double r, double eps, std::optional<double> target = std::nullopt,
    long budget = 0) {
  if (!(r > 1.0)) throw InputError("r must be > 1");
  if (!(eps >= 0.0 && eps <= 1.0)) throw InputError("eps must lie in [0, 1]");
  if (budget <= 0) budget = 8'000'000;

  long evals = 0;
  OptimizeResult best;
  best.bound = std::numeric_limits<double>::infinity();

  std::vector<double> alphas;
  for (int i = 0; i < 18; ++i)
    alphas.push_back(std::exp(std::log(0.02) * (1.0 - i / 17.0)));
  const double log2r = std::log2(r);

  for (double alpha : alphas) {
    if (evals > budget) break;
    detail::LadderSearch search(r, alpha, eps, &evals, budget);
    std::vector<double> xs, ys;
    double v = search.run(&xs, &ys);
    if (v < best.bound) {
      best.bound = v;
      best.params.r = r;
      best.params.eps = eps;
      best.params.alpha = alpha;
      best.params.mu.assign(xs.size(), 0.0);
      best.params.nu.assign(ys.size(), 0.0);
      for (size_t i = 0; i < xs.size(); ++i)
        best.params.mu[i] = std::min(1.0, xs[i] / (alpha * r));
      for (size_t j = 0; j < ys.size(); ++j)
        best.params.nu[j] = std::max(alpha / log2r, ys[j] / log2r);
    }
    if (target && best.bound <= *target) break;
  }

  if (!std::isfinite(best.bound)) throw Error("bound search found no parameters");
  // Report the value of the exact returned parameters, not the search value.
  best.bound = highlight_error_bound(best.params);
  best.target_met = !target || best.bound <= *target;
  return best;
}

inline std::string bound_params_to_json(const BoundParams& p) {
  std::ostringstream out;
  out << "{\"r\":" << fmt17(p.r) << ",\"eps\":" << fmt17(p.eps)
      << ",\"alpha\":" << fmt17(p.alpha) << ",\"k\":" << p.mu.size()
      << ",\"l\":" << p.nu.size() << ",\"mu\":[";
  for (size_t i = 0; i < p.mu.size(); ++i)
    out << (i ? "," : "") << fmt17(p.mu[i]);
  out << "],\"nu\":[";
  for (size_t j = 0; j < p.nu.size(); ++j)
    out << (j ? "," : "") << fmt17(p.nu[j]);
  out << "]}";
  return out.str();
}

}  // namespace debate

#endif  // DEBATE_BOUNDS_HPP
