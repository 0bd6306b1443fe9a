#include "commdet/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "commdet/errors.hpp"
#include "commdet/rng.hpp"

namespace commdet {

namespace {

double squared_distance(const Matrix& points, Eigen::Index i, const Eigen::RowVectorXd& center) {
    return (points.row(i) - center).squaredNorm();
}

struct KmeansRun {
    std::vector<int> assign;
    double wcss = std::numeric_limits<double>::infinity();
};

KmeansRun kmeans_once(const Matrix& points, int k, Rng& rng) {
    const Eigen::Index n = points.rows();
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // D^2-weighted seeding.
    Matrix centers(k, points.cols());
    std::vector<double> d2(static_cast<size_t>(n), 0.0);
    centers.row(0) = points.row(std::uniform_int_distribution<Eigen::Index>(0, n - 1)(rng));
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            double best = squared_distance(points, i, centers.row(0));
            for (int cc = 1; cc < c; ++cc)
                best = std::min(best, squared_distance(points, i, centers.row(cc)));
            d2[static_cast<size_t>(i)] = best;
            total += best;
        }
        Eigen::Index pick;
        if (total <= 0.0) {
            pick = std::uniform_int_distribution<Eigen::Index>(0, n - 1)(rng);
        } else {
            double target = unit(rng) * total;
            double acc = 0.0;
            pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += d2[static_cast<size_t>(i)];
                if (acc >= target) {
                    pick = i;
                    break;
                }
            }
        }
        centers.row(c) = points.row(pick);
    }

    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::vector<long> sizes(static_cast<size_t>(k), 0);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        std::fill(sizes.begin(), sizes.end(), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = squared_distance(points, i, centers.row(0));
            for (int c = 1; c < k; ++c) {
                double d = squared_distance(points, i, centers.row(c));
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[static_cast<size_t>(i)] != best) {
                assign[static_cast<size_t>(i)] = best;
                changed = true;
            }
            sizes[static_cast<size_t>(best)]++;
        }

        // Repair empty clusters: steal the point farthest from the centroid
        // of the largest cluster.
        for (int c = 0; c < k; ++c) {
            if (sizes[static_cast<size_t>(c)] > 0) continue;
            int largest = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) -
                                           sizes.begin());
            if (sizes[static_cast<size_t>(largest)] <= 1) continue;
            Eigen::Index farthest = -1;
            double far_d = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (assign[static_cast<size_t>(i)] != largest) continue;
                double d = squared_distance(points, i, centers.row(largest));
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            assign[static_cast<size_t>(farthest)] = c;
            sizes[static_cast<size_t>(largest)]--;
            sizes[static_cast<size_t>(c)]++;
            changed = true;
        }

        centers.setZero();
        for (Eigen::Index i = 0; i < n; ++i)
            centers.row(assign[static_cast<size_t>(i)]) += points.row(i);
        for (int c = 0; c < k; ++c)
            if (sizes[static_cast<size_t>(c)] > 0)
                centers.row(c) /= static_cast<double>(sizes[static_cast<size_t>(c)]);

        if (!changed) break;
    }

    KmeansRun run;
    run.assign = std::move(assign);
    run.wcss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        run.wcss += squared_distance(points, i, centers.row(run.assign[static_cast<size_t>(i)]));
    return run;
}

}  // namespace

Matrix normalized_affinity(const Matrix& b, double exponent) {
    const Eigen::Index n = b.rows();
    if (b.cols() != n) throw data_error("affinity matrix must be square");
    if (n > 0 && (b - b.transpose()).cwiseAbs().maxCoeff() > 1e-9)
        throw data_error("affinity matrix must be symmetric");
    Eigen::VectorXd scale(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double d = b.row(i).sum();
        if (d <= 0.0)
            throw data_error("degenerate row " + std::to_string(i + 1) +
                             ": nonpositive row sum in affinity matrix");
        scale(i) = std::pow(d, exponent);
    }
    // Fill the upper triangle and mirror so the result is exactly symmetric.
    Matrix l(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            double v = scale(i) * b(i, j) * scale(j);
            l(i, j) = v;
            l(j, i) = v;
        }
    }
    return l;
}

Matrix top_k_eigenvectors(const Matrix& l, int k) {
    const Eigen::Index n = l.rows();
    if (k < 1 || k > n) throw data_error("eigenvector count must lie in [1, n]");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(l);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigensolver failed to converge on a " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix");
    // Eigen sorts eigenvalues ascending; take the top k, descending.
    Matrix out(n, k);
    for (int c = 0; c < k; ++c) {
        Eigen::VectorXd v = solver.eigenvectors().col(n - 1 - c);
        double scale = v.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(v(i)) > 1e-12 * scale) {
                if (v(i) < 0.0) v = -v;
                break;
            }
        }
        out.col(c) = v;
    }
    return out;
}

Matrix row_normalize(const Matrix& x) {
    Matrix out = x;
    int zero_rows = 0;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        double norm = out.row(i).norm();
        if (norm > 0.0)
            out.row(i) /= norm;
        else
            ++zero_rows;
    }
    if (zero_rows > 0)
        std::cerr << "warning: " << zero_rows << " zero row(s) left unnormalized in embedding\n";
    return out;
}

Partition kmeans(const Matrix& points, int k, std::uint64_t seed) {
    const Eigen::Index n = points.rows();
    if (k < 1) throw data_error("cluster count must be at least 1");
    if (k > n) throw data_error("cluster count " + std::to_string(k) + " exceeds point count " +
                                std::to_string(n));
    KmeansRun best;
    for (int restart = 0; restart < 10; ++restart) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
        KmeansRun run = kmeans_once(points, k, rng);
        if (run.wcss < best.wcss) best = std::move(run);
    }
    Partition p;
    p.assign = std::move(best.assign);
    p.k = k;
    return p;
}

Partition spectral_cluster(const Matrix& b, int k, std::uint64_t seed, double exponent) {
    Matrix l = normalized_affinity(b, exponent);
    Matrix embedding = row_normalize(top_k_eigenvectors(l, k));
    return kmeans(embedding, k, seed);
}

}  // namespace commdet
