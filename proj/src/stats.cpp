#include "dblasso/stats.hpp"

#include <cmath>

#include "dblasso/types.hpp"

namespace dblasso {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

double normal_cdf(double x) {
    if (std::isnan(x)) throw InputError("normal_cdf: NaN input");
    // complementary error function avoids cancellation in both tails
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_quantile(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw InputError("normal_quantile: q must lie in (0,1)");

    // bracketed Newton on normal_cdf; the bracket [-40,40] covers all
    // representable q in (0,1)
    double lo = -40.0, hi = 40.0;
    // crude initial guess (Bowling-style logistic approximation)
    double x = -std::log(1.0 / q - 1.0) / 1.702;
    if (!(x > lo && x < hi)) x = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double f = normal_cdf(x) - q;
        if (f > 0.0)
            hi = x;
        else if (f < 0.0)
            lo = x;
        else
            return x;
        if (std::abs(f) <= 1e-15) return x;
        const double d = normal_pdf(x);
        double step = d > 0.0 ? x - f / d : 0.5 * (lo + hi);
        if (!(step > lo && step < hi)) step = 0.5 * (lo + hi);
        if (step == x) break;
        x = step;
    }
    return x;
}

}  // namespace dblasso
