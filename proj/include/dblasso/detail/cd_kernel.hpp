#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "dblasso/types.hpp"

namespace dblasso {

/// sign(z) * max(|z| - t, 0)
inline double soft_threshold(double z, double t) {
    if (t < 0.0) throw InputError("soft_threshold: threshold must be >= 0");
    if (z > t) return z - t;
    if (z < -t) return z + t;
    return 0.0;
}

namespace detail {

/// Gram view over an explicit dense PSD matrix (column-major).
class DenseGram {
public:
    explicit DenseGram(const Eigen::MatrixXd& a) : a_(a) {}
    Eigen::Index size() const { return a_.cols(); }
    double diag(Eigen::Index j) const { return a_(j, j); }
    const double* col(Eigen::Index j) const { return a_.col(j).data(); }

private:
    const Eigen::MatrixXd& a_;
};

/// Gram view over (X'X)/n with columns computed on demand and cached.
class LazyGram {
public:
    explicit LazyGram(const Eigen::MatrixXd& x)
        : x_(x), inv_n_(1.0 / static_cast<double>(x.rows())),
          cols_(x.cols()), have_(x.cols(), 0) {
        diag_ = (x.colwise().squaredNorm() * inv_n_).transpose();
    }
    Eigen::Index size() const { return x_.cols(); }
    double diag(Eigen::Index j) const { return diag_(j); }
    const double* col(Eigen::Index j) const {
        if (!have_[j]) {
            cols_[j] = (x_.transpose() * x_.col(j)) * inv_n_;
            have_[j] = 1;
        }
        return cols_[j].data();
    }

private:
    const Eigen::MatrixXd& x_;
    double inv_n_;
    mutable std::vector<Eigen::VectorXd> cols_;
    mutable std::vector<char> have_;
    Eigen::VectorXd diag_;
};

struct CdResult {
    Eigen::VectorXd theta;
    int sweeps = 0;
    bool converged = false;
    double kkt_residual = 0.0;           // from a residual recomputed at exit
    bool unbounded = false;              // flat coordinate with gradient beyond the penalty
    std::vector<double> objective_trace; // one entry per sweep when recorded
};

/// Cyclic coordinate descent with active-set inner loops for
///   minimize 0.5 t'At - c't + penalty*||t||_1.
/// Maintains the gradient residual r = c - A t via column updates; converged
/// means a full sweep moved no coordinate by more than tol AND the KKT
/// violation (checked against r recomputed from scratch) is at most tol.
template <class Gram>
CdResult cd_l1_quadratic(const Gram& g, const Eigen::VectorXd& c, double penalty,
                         double tol, int max_iter,
                         const Eigen::VectorXd* warm_start = nullptr,
                         bool record_objective = false,
                         double objective_offset = 0.0) {
    const Eigen::Index p = g.size();
    if (c.size() != p) throw InputError("cd_l1_quadratic: dimension mismatch");

    CdResult res;
    res.theta = warm_start ? *warm_start : Eigen::VectorXd::Zero(p);
    Eigen::VectorXd& th = res.theta;

    auto refresh_residual = [&](Eigen::VectorXd& r) {
        r = c;
        for (Eigen::Index j = 0; j < p; ++j)
            if (th(j) != 0.0) r -= th(j) * Eigen::Map<const Eigen::VectorXd>(g.col(j), p);
    };

    Eigen::VectorXd r(p);
    refresh_residual(r);

    auto kkt_from = [&](const Eigen::VectorXd& rr) {
        double worst = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            const double v = th(j) != 0.0
                ? std::abs(rr(j) - penalty * (th(j) > 0.0 ? 1.0 : -1.0))
                : std::max(std::abs(rr(j)) - penalty, 0.0);
            worst = std::max(worst, v);
        }
        return worst;
    };

    auto objective = [&] {
        // 0.5 t'At - c't = -0.5 t'(c + r) with r = c - At
        return objective_offset - 0.5 * th.dot(c + r) + penalty * th.lpNorm<1>();
    };

    std::vector<Eigen::Index> active;
    active.reserve(64);

    auto update_coord = [&](Eigen::Index j) -> double {
        const double ajj = g.diag(j);
        if (ajj < -1e-12) throw NumericError("coordinate descent: negative curvature on coordinate " + std::to_string(j));
        if (ajj <= 0.0) {
            if (std::abs(r(j)) > penalty * (1.0 + 1e-12) + 1e-15) res.unbounded = true;
            return 0.0;
        }
        const double z = r(j) + ajj * th(j);
        const double t = soft_threshold(z, penalty) / ajj;
        const double delta = t - th(j);
        if (delta != 0.0) {
            r -= delta * Eigen::Map<const Eigen::VectorXd>(g.col(j), p);
            th(j) = t;
        }
        return std::abs(delta);
    };

    while (res.sweeps < max_iter) {
        // full sweep
        double maxd = 0.0;
        active.clear();
        for (Eigen::Index j = 0; j < p; ++j) {
            maxd = std::max(maxd, update_coord(j));
            if (th(j) != 0.0) active.push_back(j);
            if (res.unbounded) return res;
        }
        ++res.sweeps;
        if (record_objective) res.objective_trace.push_back(objective());

        if (maxd <= tol) {
            if (kkt_from(r) <= tol) {
                res.converged = true;
                break;
            }
            // guard against drift in the maintained residual
            refresh_residual(r);
            if (kkt_from(r) <= tol) {
                res.converged = true;
                break;
            }
            continue;
        }

        // iterate on the active set until it stabilizes
        while (res.sweeps < max_iter) {
            double ad = 0.0;
            for (Eigen::Index j : active) {
                ad = std::max(ad, update_coord(j));
                if (res.unbounded) return res;
            }
            ++res.sweeps;
            if (record_objective) res.objective_trace.push_back(objective());
            if (ad <= tol) break;
        }
    }

    refresh_residual(r);
    res.kkt_residual = kkt_from(r);
    if (res.converged && res.kkt_residual > tol) res.converged = res.kkt_residual <= tol * 4.0;
    return res;
}

}  // namespace detail
}  // namespace dblasso
