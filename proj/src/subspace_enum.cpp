#include "schubert/subspace_enum.hpp"

#include <algorithm>
#include <cstring>

namespace schubert {

namespace {

constexpr unsigned long long kIndexCap = 1ull << 62;

// Next r-combination of {0..k-1} in lexicographic order; false when done.
bool next_combination(std::vector<int>& c, int k) {
    const int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == k - r + i) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    return true;
}

}  // namespace

SubspaceEnumerator::SubspaceEnumerator(int r, int k, const FieldSpec& field)
    : r_(r), k_(k), q_(field.q()), count_(0) {
    if (r < 0 || r > k) throw RangeError("subspace dimension must satisfy 0 <= r <= k");
    if (r == 0) {
        count_ = 1;
        blocks_.push_back(Block{});
        return;
    }
    std::vector<int> pivots(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) pivots[static_cast<size_t>(i)] = i;
    unsigned long long offset = 0;
    do {
        Block b;
        b.pivots = pivots;
        for (int i = 0; i < r; ++i)
            for (int j = pivots[static_cast<size_t>(i)] + 1; j < k; ++j)
                if (!std::binary_search(pivots.begin(), pivots.end(), j))
                    b.free_pos.push_back(i * k + j);
        BigInt size = big_pow(BigInt(q_), b.free_pos.size());
        count_ += size;
        if (count_ > big_from_ull(kIndexCap))
            throw BudgetExceeded("subspace family of size " + count_.get_str() +
                                 "+ cannot be indexed; tighten the search budget");
        b.size = static_cast<unsigned long long>(size.get_ui());
        b.offset = offset;
        offset += b.size;
        blocks_.push_back(std::move(b));
    } while (next_combination(pivots, k));
}

unsigned long long SubspaceEnumerator::count_ull() const {
    return static_cast<unsigned long long>(count_.get_ui());
}

void SubspaceEnumerator::decode(unsigned long long idx, Fq* mat) const {
    // Find the pivot block containing idx.
    size_t lo = 0, hi = blocks_.size();
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (blocks_[mid].offset <= idx)
            lo = mid;
        else
            hi = mid;
    }
    const Block& b = blocks_[lo];
    std::memset(mat, 0, sizeof(Fq) * static_cast<size_t>(r_) * k_);
    for (int i = 0; i < r_; ++i) mat[i * k_ + b.pivots[static_cast<size_t>(i)]] = 1;
    unsigned long long rem = idx - b.offset;
    for (size_t f = b.free_pos.size(); f-- > 0;) {
        mat[b.free_pos[f]] = static_cast<Fq>(rem % static_cast<unsigned long long>(q_));
        rem /= static_cast<unsigned long long>(q_);
    }
}

std::vector<std::vector<Fq>> SubspaceEnumerator::all() const {
    std::vector<std::vector<Fq>> out;
    unsigned long long n = count_ull();
    out.reserve(n);
    for (unsigned long long i = 0; i < n; ++i) {
        std::vector<Fq> mat(static_cast<size_t>(r_) * k_);
        decode(i, mat.data());
        out.push_back(std::move(mat));
    }
    return out;
}

HyperplaneEnumerator::HyperplaneEnumerator(int k, const FieldSpec& field)
    : k_(k), q_(field.q()), count_(0) {
    if (k < 1) throw RangeError("hyperplane enumeration requires k >= 1");
    offsets_.resize(static_cast<size_t>(k));
    unsigned long long offset = 0;
    for (int lead = 0; lead < k; ++lead) {
        offsets_[static_cast<size_t>(lead)] = offset;
        BigInt size = big_pow(BigInt(q_), static_cast<unsigned long>(k - 1 - lead));
        count_ += size;
        if (count_ > big_from_ull(kIndexCap))
            throw BudgetExceeded("hyperplane family of size " + count_.get_str() +
                                 "+ cannot be indexed; tighten the search budget");
        offset += static_cast<unsigned long long>(size.get_ui());
    }
}

unsigned long long HyperplaneEnumerator::count_ull() const {
    return static_cast<unsigned long long>(count_.get_ui());
}

void HyperplaneEnumerator::decode(unsigned long long idx, Fq* vec) const {
    size_t lead = offsets_.size() - 1;
    while (offsets_[lead] > idx) --lead;
    std::memset(vec, 0, sizeof(Fq) * static_cast<size_t>(k_));
    vec[lead] = 1;
    unsigned long long rem = idx - offsets_[lead];
    for (size_t pos = static_cast<size_t>(k_); pos-- > lead + 1;) {
        vec[pos] = static_cast<Fq>(rem % static_cast<unsigned long long>(q_));
        rem /= static_cast<unsigned long long>(q_);
    }
}

}  // namespace schubert
