#include "commdet/revision.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "commdet/errors.hpp"

namespace commdet {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::A: return "A";
        case Variant::B1: return "B1";
        case Variant::B2: return "B2";
        case Variant::B1_ML: return "B1_ML";
        case Variant::B1_CL: return "B1_CL";
        case Variant::B2_ML: return "B2_ML";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view name) {
    for (Variant v : all_variants())
        if (to_string(v) == name) return v;
    return std::nullopt;
}

const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> vs{Variant::A,     Variant::B1,    Variant::B2,
                                         Variant::B1_ML, Variant::B1_CL, Variant::B2_ML};
    return vs;
}

Matrix revise(const Matrix& a, const ConstraintSet& s, double alpha) {
    if (alpha <= 0.0) throw data_error("alpha must be positive");
    const int n = static_cast<int>(a.rows());
    Matrix out = a;
    for (const auto& [u, v] : s.ml) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw data_error("constraint endpoint outside matrix of size " + std::to_string(n));
        out(u, v) = alpha;
        out(v, u) = alpha;
    }
    for (const auto& [u, v] : s.cl) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw data_error("constraint endpoint outside matrix of size " + std::to_string(n));
        out(u, v) = 0.0;
        out(v, u) = 0.0;
    }
    return out;
}

ConstraintSet variant_constraints(const ConstraintSet& s, Variant v) {
    switch (v) {
        case Variant::A: {
            ConstraintSet empty;
            empty.n = s.n;
            return empty;
        }
        case Variant::B1: return s;
        case Variant::B2: return enhance(s).first;
        case Variant::B1_ML: return filter(s, FilterMode::ml_only);
        case Variant::B1_CL: return filter(s, FilterMode::cl_only);
        case Variant::B2_ML: return enhance(filter(s, FilterMode::ml_only)).first;
    }
    throw data_error("unknown variant");
}

Matrix build_variant(const Matrix& a, const ConstraintSet& s, Variant v, double alpha) {
    if (v == Variant::A) return a;
    return revise(a, variant_constraints(s, v), alpha);
}

std::pair<long, long> variant_constraint_counts(const ConstraintSet& s, Variant v) {
    switch (v) {
        case Variant::A: return {0, 0};
        case Variant::B1: return {s.total(), s.total()};
        case Variant::B2: return {s.total(), enhance(s).first.total()};
        case Variant::B1_ML: {
            long c = static_cast<long>(s.ml.size());
            return {c, c};
        }
        case Variant::B1_CL: {
            long c = static_cast<long>(s.cl.size());
            return {c, c};
        }
        case Variant::B2_ML: {
            long before = static_cast<long>(s.ml.size());
            return {before, enhance(filter(s, FilterMode::ml_only)).first.total()};
        }
    }
    throw data_error("unknown variant");
}

void dump_matrix_tsv(const Matrix& m, std::ostream& out) {
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.12g", m(i, j));
            out << buf << (j + 1 < m.cols() ? '\t' : '\n');
        }
    }
}

Matrix load_matrix_tsv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double x;
        while (ls >> x) row.push_back(x);
        if (!ls.eof()) throw data_error("matrix row " + std::to_string(rows.size() + 1) +
                                        ": non-numeric entry");
        if (!rows.empty() && row.size() != rows.front().size())
            throw data_error("ragged matrix row " + std::to_string(rows.size() + 1));
        rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

}  // namespace commdet
