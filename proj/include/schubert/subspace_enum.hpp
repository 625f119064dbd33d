#ifndef SCHUBERT_SUBSPACE_ENUM_HPP
#define SCHUBERT_SUBSPACE_ENUM_HPP

#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/finite_field.hpp"

namespace schubert {

// Streams the r-dimensional subspaces of GF(q)^k, each exactly once as its
// reduced row echelon basis (r x k, leading 1 per row, zeros above pivots).
// Subspaces are indexed 0 .. count-1, ordered by pivot-column combination
// (lexicographic) and then by the free entries (row-major, canonical element
// order, first free position most significant). decode() is a pure function
// of the index, so callers may partition the index range across threads and
// still produce identical results.
class SubspaceEnumerator {
   public:
    SubspaceEnumerator(int r, int k, const FieldSpec& field);

    const BigInt& count() const { return count_; }
    // Only valid when count() fits; callers budget-check first.
    unsigned long long count_ull() const;

    // Writes the RREF basis for subspace #idx into mat (r*k, row-major).
    void decode(unsigned long long idx, Fq* mat) const;

    int r() const { return r_; }
    int k() const { return k_; }

    // Materializes every basis; for small counts (tests, small searches).
    std::vector<std::vector<Fq>> all() const;

   private:
    struct Block {
        std::vector<int> pivots;      // r pivot columns, increasing, 0-based
        std::vector<int> free_pos;    // row-major free positions i*k+j
        unsigned long long size = 1;  // q^{#free}
        unsigned long long offset = 0;
    };

    int r_, k_;
    long q_;
    BigInt count_;
    std::vector<Block> blocks_;
};

// Streams the normalized nonzero vectors of GF(q)^k (first nonzero entry
// equals 1): one representative per hyperplane of P^{k-1} when read as the
// dual vector cutting it out. Index order: by position of the leading 1,
// then by the remaining entries (most significant first).
class HyperplaneEnumerator {
   public:
    HyperplaneEnumerator(int k, const FieldSpec& field);

    const BigInt& count() const { return count_; }  // (q^k - 1)/(q - 1)
    unsigned long long count_ull() const;

    // Writes normalized dual vector #idx into vec (length k).
    void decode(unsigned long long idx, Fq* vec) const;

    int k() const { return k_; }

   private:
    int k_;
    long q_;
    BigInt count_;
    std::vector<unsigned long long> offsets_;  // block start per lead position
};

}  // namespace schubert

#endif
