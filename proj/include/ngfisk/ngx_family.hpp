#pragma once

#include <functional>
#include <string>

// NG-X family transform: for a baseline cdf F on (support_lo, inf),
//   G(x) = 1 - [(1 - F(x)) / (1 - delta F(x))]^theta,  theta > 0, 0 < delta < 1.
namespace ngfisk::ngx {

/// Contract a baseline distribution must satisfy to be transformed.
/// `sf` is optional; when empty the survival is taken as 1 - cdf, which
/// loses precision in the far right tail.
struct BaselineSpec {
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    std::function<double(double)> quantile;
    std::function<double(double)> sf;
    double support_lo = 0.0;
    std::string name;
};

/// Fisk (log-logistic) baseline with scale alpha and shape beta.
BaselineSpec fisk_baseline(double alpha, double beta);

class NgxParams {
public:
    /// Throws std::invalid_argument unless theta > 0 and 0 < delta < 1.
    NgxParams(double theta, double delta);

    double theta() const noexcept { return theta_; }
    double delta() const noexcept { return delta_; }

private:
    double theta_;
    double delta_;
};

/// Probability targets handed to baseline.quantile are clamped to this range.
inline constexpr double kQuantileClamp = 1e-15;

double cdf(const BaselineSpec& baseline, const NgxParams& pars, double x);
double pdf(const BaselineSpec& baseline, const NgxParams& pars, double x);
double sf(const BaselineSpec& baseline, const NgxParams& pars, double x);

/// theta (1 - delta) f / ((1 - F)(1 - delta F)). Throws std::overflow_error
/// when the baseline survival has underflowed to zero.
double hazard(const BaselineSpec& baseline, const NgxParams& pars, double x);

/// -log sf; +inf once the survival is exactly zero.
double chf(const BaselineSpec& baseline, const NgxParams& pars, double x);

/// pdf / cdf. Throws std::domain_error where the cdf is zero.
double rhr(const BaselineSpec& baseline, const NgxParams& pars, double x);

/// Exact inverse of cdf: baseline.quantile((1 - u) / (1 - delta u)), u = (1 - p)^(1/theta).
double quantile(const BaselineSpec& baseline, const NgxParams& pars, double p);

}  // namespace ngfisk::ngx
