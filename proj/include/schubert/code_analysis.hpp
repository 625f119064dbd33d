#ifndef SCHUBERT_CODE_ANALYSIS_HPP
#define SCHUBERT_CODE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/budget.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/geometry.hpp"
#include "schubert/index_tuple.hpp"

namespace schubert {

// Generator matrix of a Schubert code as a projective system: rows indexed
// by the downset of alpha in lexicographic order (k_alpha rows), columns by
// the enumerated points (n_alpha columns). Entry (beta, x) is the
// beta-coordinate of point x. Immutable after construction.
class GeneratorMatrix {
   public:
    GeneratorMatrix(FieldSpec field, IndexTuple alpha, std::vector<IndexTuple> row_index,
                    int n, std::vector<Fq> entries);

    const FieldSpec& field() const { return field_; }
    const IndexTuple& alpha() const { return alpha_; }
    const std::vector<IndexTuple>& row_index() const { return row_index_; }
    int k() const { return static_cast<int>(row_index_.size()); }
    int n() const { return n_; }
    Fq at(int row, int col) const { return entries_[static_cast<size_t>(row) * n_ + col]; }
    const std::vector<Fq>& entries() const { return entries_; }

    // Column-major copy (n x k): one contiguous row per point, for the
    // dot-product loops in the search kernels.
    std::vector<Fq> columns_as_rows() const;

   private:
    FieldSpec field_;
    IndexTuple alpha_;
    std::vector<IndexTuple> row_index_;
    int n_;
    std::vector<Fq> entries_;  // row-major k x n
};

// Builds the generator matrix of the Schubert code of alpha over the given
// field. Verifies rank k_alpha and the absence of zero columns; a failure
// of either is an implementation bug and raises std::logic_error.
GeneratorMatrix build_schubert_code(const IndexTuple& alpha, const FieldSpec& field,
                                    const Budget& budget = {});

// Minimum distance d = n - max |X /\ H| over the hyperplanes H of P^{k-1},
// each hyperplane enumerated once as its normalized dual vector.
// The default entry point runs the search in parallel (OpenMP, max
// reduction); the serial variant is the reference it is tested against.
BigInt min_distance_bruteforce(const GeneratorMatrix& code, const Budget& budget = {});
BigInt min_distance_bruteforce_serial(const GeneratorMatrix& code, const Budget& budget = {});

// Secondary oracle: direct codeword-weight minimization. Weights are
// invariant under nonzero scaling, so one normalized message per projective
// class suffices. Serial on purpose.
BigInt min_distance_codeword_oracle(const GeneratorMatrix& code, const Budget& budget = {});

// r-th higher weight d_r = n - max |X /\ Pi| over codimension-r projective
// subspaces Pi, enumerated as reduced row echelon bases of r-dimensional
// subspaces of the dual space. Requires 1 <= r <= k.
BigInt higher_weight_bruteforce(const GeneratorMatrix& code, int r, const Budget& budget = {});
BigInt higher_weight_bruteforce_serial(const GeneratorMatrix& code, int r,
                                       const Budget& budget = {});

// Weight -> number of codewords. Every functional f contributes q-1
// codewords of weight n - |X /\ ker f|; the zero codeword accounts for the
// entry at weight 0. Counts sum to q^k.
std::map<long long, long long> weight_distribution(const GeneratorMatrix& code,
                                                   const Budget& budget = {});
std::map<long long, long long> weight_distribution_serial(const GeneratorMatrix& code,
                                                          const Budget& budget = {});

// Brute-force results for one code, as reported by the CLI.
struct WeightReport {
    long long n = 0;
    long long k = 0;
    std::vector<BigInt> d;  // d[r-1] = d_r
    std::optional<std::map<long long, long long>> distribution;
    double elapsed_ms = 0;
};

// The two families of index tuples whose coordinate sections realize the
// divisor weight formula: family(1) is the maximal tuple, family(2) the
// divisor tuple. prefer_first_branch selects the construction used when
// both apply (l == m - l); they must then give identical section counts.
std::vector<IndexTuple> close_family(int l, int m, int r, bool prefer_first_branch = true);

// Number of points of the Schubert divisor on which the Pluecker
// coordinates of family members 2 .. r+1 all vanish. Equals
// n_eta - (q^{delta-1} + ... + q^{delta-r}) for r in the theorem's range
// 1 <= r <= max{l, m-l}.
BigInt close_family_section_count(int l, int m, const FieldSpec& field, int r,
                                  const Budget& budget = {}, bool prefer_first_branch = true);

}  // namespace schubert

#endif
