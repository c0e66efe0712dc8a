#pragma once

namespace dblasso {

/// Standard normal CDF, absolute error below 1e-12 on the whole real line.
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Inverse of normal_cdf on (0,1), solved by safeguarded Newton iteration
/// so that |normal_cdf(result) - q| <= 1e-12. Throws InputError outside (0,1).
double normal_quantile(double q);

}  // namespace dblasso
