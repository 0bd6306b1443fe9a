#pragma once

#include <cstdint>

#include "commdet/graph.hpp"
#include "commdet/partition.hpp"

namespace commdet {

// L(i,j) = d_i^e * B(i,j) * d_j^e with d_i the row sum of B. The default
// e = -1/2 gives the usual degree-normalized affinity. Throws on asymmetric
// input or a nonpositive row sum.
Matrix normalized_affinity(const Matrix& b, double exponent = -0.5);

// Unit eigenvectors of the k algebraically largest eigenvalues, one per
// column, eigenvalue-descending. Sign convention: the first component whose
// magnitude exceeds 1e-12 of the max is made positive, so repeated runs and
// golden tests agree.
Matrix top_k_eigenvectors(const Matrix& l, int k);

// Rows scaled to unit L2 norm; all-zero rows stay zero.
Matrix row_normalize(const Matrix& x);

// Lloyd's algorithm with D^2-weighted (k-means++ style) seeding, 10 restarts,
// up to 100 iterations each; keeps the lowest within-cluster sum of squares.
// Empty clusters are repaired by stealing the farthest point from the
// largest cluster.
Partition kmeans(const Matrix& points, int k, std::uint64_t seed);

// normalized_affinity -> top_k_eigenvectors -> row_normalize -> kmeans.
Partition spectral_cluster(const Matrix& b, int k, std::uint64_t seed, double exponent = -0.5);

}  // namespace commdet
