#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace dblasso {

/// Bad or out-of-domain input (shape mismatch, NaN, parse failure, scale
/// limits). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside a solver (non-PSD curvature, Cholesky failure,
/// degenerate fit). Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A regression instance: response y (length n) and design matrix x (n x p).
struct Dataset {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index p() const { return x.cols(); }

    /// Checks n >= 1, p >= 1, matching row counts, and finite entries.
    void validate() const;

    static Dataset create(Eigen::MatrixXd x, Eigen::VectorXd y);
};

/// Sample covariance (X'X)/n, symmetrized exactly.
struct SampleCovariance {
    Eigen::MatrixXd sigma_hat;

    Eigen::Index p() const { return sigma_hat.rows(); }
};

/// Problem dimensions together with the recurring sqrt(log(p)/n) scale.
struct ProblemScale {
    int n = 0;
    int p = 0;
    double log_ratio = 0.0;

    ProblemScale(int n_, int p_);
};

SampleCovariance sample_covariance(const Dataset& d);

}  // namespace dblasso
