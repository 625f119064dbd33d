#ifndef SCHUBERT_INDEX_TUPLE_HPP
#define SCHUBERT_INDEX_TUPLE_HPP

#include <compare>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

// Decomposition of a tuple into maximal runs of consecutive integers.
// boundaries holds the positions p_1 < ... < p_u (1-based, in [1, l-1])
// after which a new block starts; u = boundaries.size() is minimal.
struct BlockStructure {
    std::vector<int> boundaries;
    int block_count() const { return static_cast<int>(boundaries.size()) + 1; }
};

// A strictly increasing tuple alpha = (alpha_1 < ... < alpha_l) with
// 1 <= alpha_1 and alpha_l <= m. Indexes a Schubert variety in G(l, m).
class IndexTuple {
   public:
    IndexTuple(std::vector<int> entries, int m);

    int l() const { return static_cast<int>(entries_.size()); }
    int m() const { return m_; }
    const std::vector<int>& entries() const { return entries_; }
    // 1-based access, matching the usual alpha_i notation.
    int at(int i) const { return entries_[static_cast<size_t>(i) - 1]; }

    // delta = sum (alpha_i - i): the dimension of the Schubert variety.
    int delta() const;

    // Componentwise order; both tuples must share l and m.
    static bool leq(const IndexTuple& beta, const IndexTuple& alpha);

    // All beta <= alpha in lexicographic order. The size of this set is the
    // code dimension k_alpha.
    std::vector<IndexTuple> downset() const;

    BlockStructure blocks() const;

    // All of I(l, m) in lexicographic order.
    static std::vector<IndexTuple> all(int l, int m);

    // "(2,4)"
    std::string str() const;
    // Accepts "2,4" or "(2,4)".
    static IndexTuple parse(const std::string& text, int m);

    bool operator==(const IndexTuple& rhs) const = default;
    // Lexicographic; only meaningful within one I(l, m).
    bool operator<(const IndexTuple& rhs) const { return entries_ < rhs.entries_; }

   private:
    std::vector<int> entries_;
    int m_;
};

// The maximal tuple theta = (m-l+1, ..., m); its variety is all of G(l, m).
IndexTuple theta_tuple(int l, int m);

// The submaximal tuple eta = (m-l, m-l+2, ..., m); its variety is the
// Schubert divisor. Requires 1 < l < m.
IndexTuple eta_tuple(int l, int m);

}  // namespace schubert

#endif
