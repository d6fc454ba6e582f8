// Copyright 2026 The qgames Authors
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

#include "qgames/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qgames/error.hpp"

namespace qgames {

namespace {

using Point = std::vector<double>;

struct Vertex {
  Point x;
  double cost;  // negated objective; +inf when undefined
};

class Minimizer {
 public:
  Minimizer(const Objective& objective, int budget)
      : objective_(objective), budget_(budget) {}

  double cost(const Point& x) {
    ++evaluations_;
    const double v = objective_(x);
    return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
  }

  std::vector<Vertex> build_simplex(const Point& center, double center_cost,
                                    double step) {
    std::vector<Vertex> simplex;
    simplex.push_back({center, center_cost});
    for (std::size_t i = 0; i < center.size(); ++i) {
      Point x = center;
      x[i] += step;
      simplex.push_back({x, cost(x)});
    }
    return simplex;
  }

  // Runs until convergence or the iteration budget is spent.
  void run(std::vector<Vertex>& simplex, double tolerance) {
    const double n = static_cast<double>(simplex.size() - 1);
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / n;
    const double contract = 0.75 - 1.0 / (2.0 * n);
    const double shrink = 1.0 - 1.0 / n;
    const std::size_t dim = simplex.front().x.size();

    auto by_cost = [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; };
    auto combine = [dim](const Point& a, const Point& b, double t) {
      // a + t (b - a)
      Point out(dim);
      for (std::size_t i = 0; i < dim; ++i) out[i] = a[i] + t * (b[i] - a[i]);
      return out;
    };

    while (iterations_ < budget_) {
      std::stable_sort(simplex.begin(), simplex.end(), by_cost);
      const double spread = simplex.back().cost - simplex.front().cost;
      if (std::isfinite(spread) && spread <= tolerance) return;
      ++iterations_;

      Point centroid(dim, 0.0);
      for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
        for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
      }
      for (double& c : centroid) c /= n;

      Vertex& worst = simplex.back();
      const double best_cost = simplex.front().cost;
      const double second_worst = simplex[simplex.size() - 2].cost;

      Point xr = combine(centroid, worst.x, -reflect);
      const double fr = cost(xr);
      if (fr < best_cost) {
        Point xe = combine(centroid, worst.x, -reflect * expand);
        const double fe = cost(xe);
        if (fe < fr) {
          worst = {std::move(xe), fe};
        } else {
          worst = {std::move(xr), fr};
        }
        continue;
      }
      if (fr < second_worst) {
        worst = {std::move(xr), fr};
        continue;
      }
      if (fr < worst.cost) {
        Point xc = combine(centroid, xr, contract);
        const double fc = cost(xc);
        if (fc <= fr) {
          worst = {std::move(xc), fc};
          continue;
        }
      } else {
        Point xc = combine(centroid, worst.x, contract);
        const double fc = cost(xc);
        if (fc < worst.cost) {
          worst = {std::move(xc), fc};
          continue;
        }
      }
      for (std::size_t v = 1; v < simplex.size(); ++v) {
        simplex[v].x = combine(simplex.front().x, simplex[v].x, shrink);
        simplex[v].cost = cost(simplex[v].x);
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_cost);
  }

  int iterations() const { return iterations_; }
  int evaluations() const { return evaluations_; }

 private:
  const Objective& objective_;
  int budget_;
  int iterations_ = 0;
  int evaluations_ = 0;
};

}  // namespace

NelderMeadResult maximize_nelder_mead(const Objective& objective,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options) {
  if (start.empty()) throw Error("Nelder-Mead needs at least one parameter");
  if (options.max_iterations < 0) throw Error("negative iteration budget");

  Minimizer m(objective, options.max_iterations);
  Vertex best{start, m.cost(start)};
  double step = options.initial_step;
  for (int round = 0; round <= options.max_reinitializations; ++round) {
    auto simplex = m.build_simplex(best.x, best.cost, step);
    m.run(simplex, options.tolerance);
    const Vertex& found = simplex.front();
    const bool improved = found.cost < best.cost - options.tolerance;
    if (found.cost < best.cost) best = found;
    if (!improved || m.iterations() >= options.max_iterations) break;
    step *= 0.1;
  }
  return {best.x, -best.cost, m.iterations(), m.evaluations()};
}

}  // namespace qgames
