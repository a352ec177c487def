#include "ngfisk/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ngfisk::opt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_eval(const Objective& f, std::span<const double> x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
}

double simplex_diameter(const std::vector<std::vector<double>>& simplex, std::size_t best) {
    double d = 0.0;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i == best) {
            continue;
        }
        for (std::size_t j = 0; j < simplex[i].size(); ++j) {
            d = std::max(d, std::abs(simplex[i][j] - simplex[best][j]));
        }
    }
    return d;
}

NelderMeadResult run_simplex(const Objective& f, const std::vector<double>& x0, double step,
                             int budget, double diameter_tol) {
    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    int evals = 0;
    values[0] = safe_eval(f, simplex[0]);
    ++evals;
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += step;
        values[i + 1] = safe_eval(f, simplex[i + 1]);
        ++evals;
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto point = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
        }
    };

    bool converged = false;
    while (evals < budget) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - 1];
        if (simplex_diameter(simplex, best) < diameter_tol) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                centroid[j] += simplex[i][j];
            }
        }
        for (auto& c : centroid) {
            c /= static_cast<double>(dim);
        }

        point(-1.0, simplex[worst], trial);
        const double reflected = safe_eval(f, trial);
        ++evals;
        if (reflected < values[best]) {
            point(-2.0, simplex[worst], trial2);
            const double expanded = safe_eval(f, trial2);
            ++evals;
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < values[second]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        // contraction: outside if the reflection beat the worst vertex, inside otherwise
        const bool outside = reflected < values[worst];
        point(outside ? -0.5 : 0.5, simplex[worst], trial2);
        const double contracted = safe_eval(f, trial2);
        ++evals;
        if (contracted < (outside ? reflected : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            }
            values[i] = safe_eval(f, simplex[i]);
            ++evals;
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    const auto best = static_cast<std::size_t>(best_it - values.begin());
    NelderMeadResult result;
    result.x = simplex[best];
    result.value = values[best];
    result.diameter = simplex_diameter(simplex, best);
    result.evaluations = evals;
    result.converged = converged || result.diameter < diameter_tol;
    return result;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
    if (x0.empty()) {
        throw std::invalid_argument("nelder_mead: empty starting point");
    }
    NelderMeadResult result =
        run_simplex(f, x0, options.initial_step, options.max_evaluations, options.diameter_tol);
    // a collapsed simplex can stall away from the optimum; rebuild it at the incumbent
    for (int r = 0; r < options.restarts; ++r) {
        const int budget = options.max_evaluations - result.evaluations;
        if (budget <= static_cast<int>(2 * x0.size() + 2)) {
            break;
        }
        const double step = std::max(0.25 * options.initial_step, 1e3 * options.diameter_tol);
        NelderMeadResult again = run_simplex(f, result.x, step, budget, options.diameter_tol);
        again.evaluations += result.evaluations;
        if (again.value <= result.value) {
            result = std::move(again);
        } else {
            result.evaluations = again.evaluations;
        }
    }
    return result;
}

ProjectedGradientResult projected_gradient(const Objective& f, const Gradient& grad,
                                           std::vector<double> x0, std::span<const double> lower,
                                           std::span<const double> upper,
                                           const ProjectedGradientOptions& options) {
    const std::size_t dim = x0.size();
    if (lower.size() != dim || upper.size() != dim) {
        throw std::invalid_argument("projected_gradient: bound sizes do not match x0");
    }
    auto project = [&](std::vector<double>& x) {
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = std::clamp(x[j], lower[j], upper[j]);
        }
    };
    project(x0);

    ProjectedGradientResult result;
    result.x = std::move(x0);
    result.value = safe_eval(f, result.x);
    std::vector<double> trial(dim);
    double step = 1e-2;

    for (int it = 0; it < options.max_iterations; ++it) {
        const std::vector<double> g = grad(result.x);
        double pg_norm = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double moved = std::clamp(result.x[j] - g[j], lower[j], upper[j]);
            pg_norm = std::max(pg_norm, std::abs(moved - result.x[j]));
        }
        result.gradient_norm = pg_norm;
        result.iterations = it;
        if (!std::isfinite(pg_norm)) {
            break;
        }
        if (pg_norm < options.gradient_tol) {
            result.converged = true;
            return result;
        }

        bool accepted = false;
        for (int halving = 0; halving < 60; ++halving) {
            double decrease = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                trial[j] = result.x[j] - step * g[j];
            }
            project(trial);
            for (std::size_t j = 0; j < dim; ++j) {
                decrease += g[j] * (result.x[j] - trial[j]);
            }
            const double value = safe_eval(f, trial);
            if (value <= result.value - 1e-4 * decrease && value < kInf) {
                accepted = value < result.value || decrease > 0.0;
                if (accepted) {
                    result.x = trial;
                    result.value = value;
                }
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        step = std::min(step * 2.0, 1e6);
    }
    return result;
}

}  // namespace ngfisk::opt
