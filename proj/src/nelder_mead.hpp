#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace qcap::detail {

struct NelderMeadOptions {
  int max_evaluations = 4000;
  double f_tolerance = 1e-7;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fval = 0.0;
  bool converged = false;
  int evaluations = 0;
};

/// Downhill simplex minimizer with restarts: when the simplex collapses
/// before the evaluation budget is spent, it is rebuilt around the incumbent
/// with a smaller step, which polishes the solution without derivatives.
inline NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    const NelderMeadOptions& opts) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t n = x0.size();
  NelderMeadResult result;
  result.x = x0;
  result.fval = f(x0);
  result.evaluations = 1;

  double step = opts.initial_step;
  bool ever_converged = false;

  while (result.evaluations < opts.max_evaluations) {
    // Simplex around the incumbent.
    std::vector<std::vector<double>> simplex(n + 1, result.x);
    std::vector<double> fx(n + 1);
    fx[0] = result.fval;
    for (std::size_t i = 0; i < n; ++i) {
      simplex[i + 1][i] += step;
      fx[i + 1] = f(simplex[i + 1]);
    }
    result.evaluations += static_cast<int>(n);

    std::vector<std::size_t> order(n + 1);
    bool converged_round = false;
    while (result.evaluations < opts.max_evaluations) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
      const std::size_t best = order[0];
      const std::size_t worst = order[n];
      const std::size_t second_worst = order[n - 1];

      if (std::abs(fx[worst] - fx[best]) <= opts.f_tolerance) {
        converged_round = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      auto blend = [&](double coeff) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = centroid[j] + coeff * (simplex[worst][j] - centroid[j]);
        }
        return x;
      };

      std::vector<double> reflected = blend(-kReflect);
      const double f_reflected = f(reflected);
      ++result.evaluations;

      if (f_reflected < fx[best]) {
        std::vector<double> expanded = blend(-kExpand);
        const double f_expanded = f(expanded);
        ++result.evaluations;
        if (f_expanded < f_reflected) {
          simplex[worst] = std::move(expanded);
          fx[worst] = f_expanded;
        } else {
          simplex[worst] = std::move(reflected);
          fx[worst] = f_reflected;
        }
      } else if (f_reflected < fx[second_worst]) {
        simplex[worst] = std::move(reflected);
        fx[worst] = f_reflected;
      } else {
        const bool outside = f_reflected < fx[worst];
        std::vector<double> contracted = blend(outside ? -kContract : kContract);
        const double f_contracted = f(contracted);
        ++result.evaluations;
        if (f_contracted < std::min(fx[worst], f_reflected)) {
          simplex[worst] = std::move(contracted);
          fx[worst] = f_contracted;
        } else {
          for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j) {
              simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
            }
            fx[i] = f(simplex[i]);
          }
          result.evaluations += static_cast<int>(n);
        }
      }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (fx[i] < fx[best]) best = i;
    }
    if (fx[best] < result.fval) {
      result.fval = fx[best];
      result.x = simplex[best];
    }
    ever_converged = ever_converged || converged_round;
    if (!converged_round) break;  // budget exhausted mid-round
    step *= 0.2;
    if (step < 1e-6) break;
  }

  result.converged = ever_converged;
  return result;
}

}  // namespace qcap::detail
