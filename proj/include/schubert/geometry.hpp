#ifndef SCHUBERT_GEOMETRY_HPP
#define SCHUBERT_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "schubert/budget.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/index_tuple.hpp"

namespace schubert {

// Rank of a rows x cols matrix over GF(q) (row-major), by elimination.
int matrix_rank(std::vector<Fq> mat, int rows, int cols, const FieldSpec& field);

// Determinant of an n x n matrix over GF(q).
Fq matrix_det(std::vector<Fq> mat, int n, const FieldSpec& field);

// The Pluecker coordinate index set I(l, m) in lexicographic order, with
// positional lookup. Shared by points, generator matrices and the CLI so
// every artifact agrees on coordinate order.
class PluckerFrame {
   public:
    PluckerFrame(int l, int m);

    int l() const { return l_; }
    int m() const { return m_; }
    const std::vector<IndexTuple>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    int position(const IndexTuple& gamma) const;

   private:
    int l_, m_;
    std::vector<IndexTuple> indices_;
};

// A point of the Pluecker embedding, normalized so the lexicographically
// first nonzero coordinate is 1. coords follows PluckerFrame order.
struct PluckerPoint {
    std::vector<Fq> coords;
    bool operator==(const PluckerPoint& rhs) const = default;
    bool operator<(const PluckerPoint& rhs) const { return coords < rhs.coords; }
};

// Canonical matrix of a point of the Schubert cell C_beta: 1 at (i, beta_i),
// zeros to the right of and below each pivot, free entries elsewhere left of
// the pivots. Exactly delta_beta positions are free.
struct EchelonRepresentative {
    IndexTuple cell;
    std::vector<Fq> matrix;  // l x m row-major
};

// All q^{delta_beta} representatives of the cell C_beta, ordered by row-major
// assignment of the free entries in canonical field-element order.
std::vector<EchelonRepresentative> enumerate_cell(const IndexTuple& beta, const FieldSpec& field,
                                                  const Budget& budget = {});

// Pluecker coordinates of the row space of a rank-l matrix (l x m row-major):
// coordinate at gamma is the l x l minor on columns gamma, normalized.
// Throws RankDeficient when the rows are dependent.
PluckerPoint plucker_coordinates(const std::vector<Fq>& matrix, const PluckerFrame& frame,
                                 const FieldSpec& field);

// The rational points of the Schubert variety: cells C_beta for beta <= alpha
// in lexicographic order, each cell in its own canonical order. Point count
// is sum q^{delta_beta} over the downset. Parallelized over cells; output is
// identical to the serial reference for any thread count.
std::vector<PluckerPoint> enumerate_schubert_points(const IndexTuple& alpha, const FieldSpec& field,
                                                    const Budget& budget = {});
std::vector<PluckerPoint> enumerate_schubert_points_serial(const IndexTuple& alpha,
                                                           const FieldSpec& field,
                                                           const Budget& budget = {});

// Intersection dimensions with the standard flag: dims[j-1] = dim(W /\ A_j)
// where A_j is spanned by the first j basis vectors.
struct SubspaceFlagProfile {
    std::vector<int> dims;
};

// The profile of the row space of a rank-l matrix and the unique cell beta
// whose jumps it realizes. Membership test: W lies in the Schubert variety
// of alpha iff its cell satisfies beta <= alpha.
std::pair<SubspaceFlagProfile, IndexTuple> profile_and_cell(const std::vector<Fq>& matrix, int l,
                                                            int m, const FieldSpec& field);

}  // namespace schubert

#endif
