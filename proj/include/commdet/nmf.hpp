#pragma once

#include <cstdint>
#include <vector>

#include "commdet/graph.hpp"
#include "commdet/partition.hpp"

namespace commdet {

// Result of X ~ W*H with W (n x k) and H (k x n), both nonnegative.
// objective_trace[t] is ||X - WH||_F^2 after iteration t.
struct Factorization {
    Matrix w, h;
    std::vector<double> objective_trace;
};

struct NmfOptions {
    int iters = 100;
    double tol = 0.0;  // relative objective change for early exit; 0 disables
};

// Multiplicative least-squares updates:
//   W <- W .* (X H') ./ (W H H'),  H <- H .* (W' X) ./ (W' W H),
// denominators guarded by max(., 1e-12). W and H start uniform in (0,1],
// seeded, so runs are reproducible.
Factorization nmf(const Matrix& x, int k, std::uint64_t seed, const NmfOptions& opt = {});

// Per column of H, the argmax row (ties -> lowest row index). All-zero
// columns go to community 0; their count is reported through
// degenerate_columns when given.
Partition assign_from_h(const Matrix& h, int* degenerate_columns = nullptr);

}  // namespace commdet
