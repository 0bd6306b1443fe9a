#include "commdet/nmf.hpp"

#include <cmath>
#include <iostream>

#include "commdet/errors.hpp"
#include "commdet/rng.hpp"

namespace commdet {

namespace {

constexpr double kDenominatorFloor = 1e-12;

Matrix random_uniform(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = 1.0 - unit(rng);  // (0, 1]
    return m;
}

}  // namespace

Factorization nmf(const Matrix& x, int k, std::uint64_t seed, const NmfOptions& opt) {
    const Eigen::Index n = x.rows();
    if (x.cols() != n) throw data_error("nmf expects a square matrix");
    if (k < 1) throw data_error("community count must be at least 1");
    if (k > n) throw data_error("community count " + std::to_string(k) +
                                " exceeds node count " + std::to_string(n));
    if (opt.iters < 1) throw data_error("iteration count must be at least 1");
    if (x.minCoeff() < 0.0) throw data_error("nmf input must be entrywise nonnegative");

    Rng rng(seed);
    Factorization f;
    f.w = random_uniform(n, k, rng);
    f.h = random_uniform(k, n, rng);
    f.objective_trace.reserve(static_cast<size_t>(opt.iters));

    for (int t = 0; t < opt.iters; ++t) {
        f.w = f.w.cwiseProduct(x * f.h.transpose())
                  .cwiseQuotient((f.w * (f.h * f.h.transpose())).cwiseMax(kDenominatorFloor));
        f.h = f.h.cwiseProduct(f.w.transpose() * x)
                  .cwiseQuotient(((f.w.transpose() * f.w) * f.h).cwiseMax(kDenominatorFloor));
        double obj = (x - f.w * f.h).squaredNorm();
        f.objective_trace.push_back(obj);
        if (opt.tol > 0.0 && t > 0) {
            double prev = f.objective_trace[static_cast<size_t>(t) - 1];
            if (std::abs(prev - obj) <= opt.tol * std::max(prev, kDenominatorFloor)) break;
        }
    }
    return f;
}

Partition assign_from_h(const Matrix& h, int* degenerate_columns) {
    const Eigen::Index k = h.rows(), n = h.cols();
    if (k < 1) throw data_error("H must have at least one row");
    Partition p;
    p.k = static_cast<int>(k);
    p.assign.resize(static_cast<size_t>(n));
    int degenerate = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        int best = 0;
        double best_val = h(0, j);
        for (Eigen::Index i = 1; i < k; ++i) {
            if (h(i, j) > best_val) {  // strict: ties keep the lowest index
                best_val = h(i, j);
                best = static_cast<int>(i);
            }
        }
        if (best_val == 0.0) {
            ++degenerate;
            best = 0;
        }
        p.assign[static_cast<size_t>(j)] = best;
    }
    if (degenerate_columns != nullptr) {
        *degenerate_columns = degenerate;
    } else if (degenerate > 0) {
        std::cerr << "warning: " << degenerate << " all-zero column(s) in H assigned to community 0\n";
    }
    return p;
}

}  // namespace commdet
