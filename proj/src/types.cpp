#include "dblasso/types.hpp"

#include <cmath>

namespace dblasso {

void Dataset::validate() const {
    if (x.rows() < 1 || x.cols() < 1)
        throw InputError("Dataset: need n >= 1 and p >= 1");
    if (y.size() != x.rows())
        throw InputError("Dataset: X has " + std::to_string(x.rows()) +
                         " rows but y has " + std::to_string(y.size()) + " entries");
    if (!x.allFinite())
        throw InputError("Dataset: non-finite entry in X");
    if (!y.allFinite())
        throw InputError("Dataset: non-finite entry in y");
}

Dataset Dataset::create(Eigen::MatrixXd x, Eigen::VectorXd y) {
    Dataset d{std::move(x), std::move(y)};
    d.validate();
    return d;
}

ProblemScale::ProblemScale(int n_, int p_) : n(n_), p(p_) {
    if (n < 1 || p < 1) throw InputError("ProblemScale: need n >= 1 and p >= 1");
    log_ratio = std::sqrt(std::log(static_cast<double>(p)) / n);
}

SampleCovariance sample_covariance(const Dataset& d) {
    d.validate();
    const double n = static_cast<double>(d.n());
    Eigen::MatrixXd s = (d.x.transpose() * d.x) / n;
    // symmetrize exactly
    s = ((s + s.transpose()) * 0.5).eval();
    return SampleCovariance{std::move(s)};
}

}  // namespace dblasso
