#include "schubert/geometry.hpp"

#include <omp.h>

#include <algorithm>

namespace schubert {

int matrix_rank(std::vector<Fq> mat, int rows, int cols, const FieldSpec& field) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (mat[static_cast<size_t>(i) * cols + col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(mat[static_cast<size_t>(rank) * cols + j], mat[static_cast<size_t>(pivot) * cols + j]);
        Fq lead = mat[static_cast<size_t>(rank) * cols + col];
        Fq lead_inv = field.inv(lead);
        for (int i = rank + 1; i < rows; ++i) {
            Fq factor = field.mul(mat[static_cast<size_t>(i) * cols + col], lead_inv);
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j) {
                Fq sub = field.mul(factor, mat[static_cast<size_t>(rank) * cols + j]);
                mat[static_cast<size_t>(i) * cols + j] =
                    field.sub(mat[static_cast<size_t>(i) * cols + j], sub);
            }
        }
        ++rank;
    }
    return rank;
}

Fq matrix_det(std::vector<Fq> mat, int n, const FieldSpec& field) {
    Fq det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (mat[static_cast<size_t>(i) * n + col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(mat[static_cast<size_t>(col) * n + j], mat[static_cast<size_t>(pivot) * n + j]);
            det = field.neg(det);
        }
        Fq lead = mat[static_cast<size_t>(col) * n + col];
        det = field.mul(det, lead);
        Fq lead_inv = field.inv(lead);
        for (int i = col + 1; i < n; ++i) {
            Fq factor = field.mul(mat[static_cast<size_t>(i) * n + col], lead_inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                Fq sub = field.mul(factor, mat[static_cast<size_t>(col) * n + j]);
                mat[static_cast<size_t>(i) * n + j] = field.sub(mat[static_cast<size_t>(i) * n + j], sub);
            }
        }
    }
    return det;
}

PluckerFrame::PluckerFrame(int l, int m) : l_(l), m_(m), indices_(IndexTuple::all(l, m)) {}

int PluckerFrame::position(const IndexTuple& gamma) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), gamma);
    if (it == indices_.end() || !(*it == gamma))
        throw InvalidInput("tuple " + gamma.str() + " is not an index of this frame");
    return static_cast<int>(it - indices_.begin());
}

namespace {

// Free positions of the cell of beta: row-major (i, j) with j left of the
// row's pivot and not in an earlier pivot column. There are exactly
// delta_beta of them.
std::vector<int> cell_free_positions(const IndexTuple& beta) {
    const int l = beta.l(), m = beta.m();
    std::vector<int> free_pos;
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j < beta.at(i); ++j) {
            bool pivot_col = false;
            for (int t = 1; t < i; ++t)
                if (beta.at(t) == j) {
                    pivot_col = true;
                    break;
                }
            if (!pivot_col) free_pos.push_back((i - 1) * m + (j - 1));
        }
    return free_pos;
}

std::vector<Fq> cell_matrix(const IndexTuple& beta, const std::vector<int>& free_pos,
                            unsigned long long idx, long q) {
    const int l = beta.l(), m = beta.m();
    std::vector<Fq> mat(static_cast<size_t>(l) * m, 0);
    for (int i = 1; i <= l; ++i) mat[static_cast<size_t>(i - 1) * m + (beta.at(i) - 1)] = 1;
    for (size_t f = free_pos.size(); f-- > 0;) {
        mat[static_cast<size_t>(free_pos[f])] = static_cast<Fq>(idx % static_cast<unsigned long long>(q));
        idx /= static_cast<unsigned long long>(q);
    }
    return mat;
}

}  // namespace

std::vector<EchelonRepresentative> enumerate_cell(const IndexTuple& beta, const FieldSpec& field,
                                                  const Budget& budget) {
    std::vector<int> free_pos = cell_free_positions(beta);
    BigInt count = big_pow(BigInt(field.q()), free_pos.size());
    budget.check_points(count);
    unsigned long long n = static_cast<unsigned long long>(count.get_ui());
    std::vector<EchelonRepresentative> out;
    out.reserve(n);
    for (unsigned long long i = 0; i < n; ++i)
        out.push_back(EchelonRepresentative{beta, cell_matrix(beta, free_pos, i, field.q())});
    return out;
}

PluckerPoint plucker_coordinates(const std::vector<Fq>& matrix, const PluckerFrame& frame,
                                 const FieldSpec& field) {
    const int l = frame.l(), m = frame.m();
    PluckerPoint pt;
    pt.coords.resize(static_cast<size_t>(frame.size()));
    std::vector<Fq> minor(static_cast<size_t>(l) * l);
    bool any = false;
    for (int c = 0; c < frame.size(); ++c) {
        const IndexTuple& gamma = frame.indices()[static_cast<size_t>(c)];
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                minor[static_cast<size_t>(i) * l + j] =
                    matrix[static_cast<size_t>(i) * m + (gamma.at(j + 1) - 1)];
        Fq d = matrix_det(minor, l, field);
        pt.coords[static_cast<size_t>(c)] = d;
        any = any || d != 0;
    }
    if (!any) throw RankDeficient("matrix rows are linearly dependent");
    for (Fq& c : pt.coords)
        if (c != 0) {
            Fq scale = field.inv(c);
            if (scale != 1)
                for (Fq& x : pt.coords) x = field.mul(x, scale);
            break;
        }
    return pt;
}

namespace {

std::vector<PluckerPoint> enumerate_points_impl(const IndexTuple& alpha, const FieldSpec& field,
                                                const Budget& budget, bool parallel) {
    const PluckerFrame frame(alpha.l(), alpha.m());
    const std::vector<IndexTuple> cells = alpha.downset();
    const long q = field.q();

    std::vector<std::vector<int>> free_pos(cells.size());
    std::vector<unsigned long long> offsets(cells.size() + 1, 0);
    BigInt total = 0;
    for (size_t c = 0; c < cells.size(); ++c) {
        free_pos[c] = cell_free_positions(cells[c]);
        total += big_pow(BigInt(q), free_pos[c].size());
        budget.check_points(total);
        offsets[c + 1] = static_cast<unsigned long long>(total.get_ui());
    }

    std::vector<PluckerPoint> points(offsets.back());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long c = 0; c < static_cast<long long>(cells.size()); ++c) {
        const auto& cell = cells[static_cast<size_t>(c)];
        const auto& fp = free_pos[static_cast<size_t>(c)];
        unsigned long long n = offsets[static_cast<size_t>(c) + 1] - offsets[static_cast<size_t>(c)];
        for (unsigned long long i = 0; i < n; ++i) {
            std::vector<Fq> mat = cell_matrix(cell, fp, i, q);
            points[offsets[static_cast<size_t>(c)] + i] = plucker_coordinates(mat, frame, field);
        }
    }
    return points;
}

}  // namespace

std::vector<PluckerPoint> enumerate_schubert_points(const IndexTuple& alpha, const FieldSpec& field,
                                                    const Budget& budget) {
    return enumerate_points_impl(alpha, field, budget, true);
}

std::vector<PluckerPoint> enumerate_schubert_points_serial(const IndexTuple& alpha,
                                                           const FieldSpec& field,
                                                           const Budget& budget) {
    return enumerate_points_impl(alpha, field, budget, false);
}

std::pair<SubspaceFlagProfile, IndexTuple> profile_and_cell(const std::vector<Fq>& matrix, int l,
                                                            int m, const FieldSpec& field) {
    if (matrix_rank(matrix, l, m, field) != l)
        throw RankDeficient("matrix rows are linearly dependent");
    SubspaceFlagProfile profile;
    profile.dims.resize(static_cast<size_t>(m));
    std::vector<int> jumps;
    int prev = 0;
    for (int j = 1; j <= m; ++j) {
        // dim(W /\ A_j) = l - rank of the columns j+1 .. m.
        std::vector<Fq> tail(static_cast<size_t>(l) * (m - j));
        for (int i = 0; i < l; ++i)
            for (int col = j; col < m; ++col)
                tail[static_cast<size_t>(i) * (m - j) + (col - j)] =
                    matrix[static_cast<size_t>(i) * m + col];
        int dim = j == m ? l : l - matrix_rank(tail, l, m - j, field);
        profile.dims[static_cast<size_t>(j - 1)] = dim;
        if (dim == prev + 1) jumps.push_back(j);
        prev = dim;
    }
    return {std::move(profile), IndexTuple(std::move(jumps), m)};
}

}  // namespace schubert
