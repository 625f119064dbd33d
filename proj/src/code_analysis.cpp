#include "schubert/code_analysis.hpp"

#include <algorithm>

#include "schubert/combinatorics.hpp"
#include "schubert/subspace_enum.hpp"

namespace schubert {

GeneratorMatrix::GeneratorMatrix(FieldSpec field, IndexTuple alpha,
                                 std::vector<IndexTuple> row_index, int n, std::vector<Fq> entries)
    : field_(std::move(field)),
      alpha_(std::move(alpha)),
      row_index_(std::move(row_index)),
      n_(n),
      entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(row_index_.size()) * n_)
        throw std::logic_error("generator matrix shape mismatch");
}

std::vector<Fq> GeneratorMatrix::columns_as_rows() const {
    std::vector<Fq> cols(static_cast<size_t>(n_) * k());
    for (int i = 0; i < k(); ++i)
        for (int j = 0; j < n_; ++j) cols[static_cast<size_t>(j) * k() + i] = at(i, j);
    return cols;
}

GeneratorMatrix build_schubert_code(const IndexTuple& alpha, const FieldSpec& field,
                                    const Budget& budget) {
    const PluckerFrame frame(alpha.l(), alpha.m());
    std::vector<IndexTuple> rows = alpha.downset();
    std::vector<PluckerPoint> points = enumerate_schubert_points(alpha, field, budget);
    const int k = static_cast<int>(rows.size());
    const int n = static_cast<int>(points.size());

    std::vector<int> row_pos(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) row_pos[i] = frame.position(rows[i]);

    std::vector<Fq> entries(static_cast<size_t>(k) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            entries[static_cast<size_t>(i) * n + j] =
                points[static_cast<size_t>(j)].coords[static_cast<size_t>(row_pos[static_cast<size_t>(i)])];

    for (int j = 0; j < n; ++j) {
        bool nonzero = false;
        for (int i = 0; i < k && !nonzero; ++i) nonzero = entries[static_cast<size_t>(i) * n + j] != 0;
        if (!nonzero) throw std::logic_error("zero column in generator matrix (bug)");
    }
    if (matrix_rank(entries, k, n, field) != k)
        throw std::logic_error("generator matrix rank below k_alpha (bug)");

    return GeneratorMatrix(field, alpha, std::move(rows), n, std::move(entries));
}

namespace {

// Columns of the code on the hyperplane cut out by dual vector f.
inline int columns_on_hyperplane(const Fq* cols, int n, int k, const FieldSpec& field, const Fq* f) {
    int on = 0;
    for (int j = 0; j < n; ++j) {
        const Fq* col = cols + static_cast<size_t>(j) * k;
        Fq dot = 0;
        for (int i = 0; i < k; ++i)
            if (f[i] != 0 && col[i] != 0) dot = field.add(dot, field.mul(f[i], col[i]));
        if (dot == 0) ++on;
    }
    return on;
}

// Columns annihilated by every row of the r x k dual basis.
inline int columns_on_section(const Fq* cols, int n, int k, int r, const FieldSpec& field,
                              const Fq* basis) {
    int on = 0;
    for (int j = 0; j < n; ++j) {
        const Fq* col = cols + static_cast<size_t>(j) * k;
        bool inside = true;
        for (int row = 0; row < r && inside; ++row) {
            const Fq* f = basis + static_cast<size_t>(row) * k;
            Fq dot = 0;
            for (int i = 0; i < k; ++i)
                if (f[i] != 0 && col[i] != 0) dot = field.add(dot, field.mul(f[i], col[i]));
            inside = dot == 0;
        }
        if (inside) ++on;
    }
    return on;
}

BigInt min_distance_impl(const GeneratorMatrix& code, const Budget& budget, bool parallel) {
    const FieldSpec& field = code.field();
    const int k = code.k(), n = code.n();
    budget.check_subspaces(gaussian_binomial(k, 1, BigInt(field.q())));
    const HyperplaneEnumerator hyperplanes(k, field);
    const unsigned long long total = hyperplanes.count_ull();
    const std::vector<Fq> cols = code.columns_as_rows();

    int best = 0;
#pragma omp parallel if (parallel)
    {
        std::vector<Fq> f(static_cast<size_t>(k));
        int local = 0;
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            hyperplanes.decode(static_cast<unsigned long long>(idx), f.data());
            local = std::max(local, columns_on_hyperplane(cols.data(), n, k, field, f.data()));
        }
#pragma omp critical
        best = std::max(best, local);
    }
    return BigInt(n - best);
}

BigInt higher_weight_impl(const GeneratorMatrix& code, int r, const Budget& budget, bool parallel) {
    const FieldSpec& field = code.field();
    const int k = code.k(), n = code.n();
    if (r < 1 || r > k) throw RangeError("higher weight requires 1 <= r <= k");
    budget.check_subspaces(gaussian_binomial(k, r, BigInt(field.q())));
    const SubspaceEnumerator duals(r, k, field);
    const unsigned long long total = duals.count_ull();
    const std::vector<Fq> cols = code.columns_as_rows();

    int best = 0;
#pragma omp parallel if (parallel)
    {
        std::vector<Fq> basis(static_cast<size_t>(r) * k);
        int local = 0;
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            duals.decode(static_cast<unsigned long long>(idx), basis.data());
            local = std::max(local, columns_on_section(cols.data(), n, k, r, field, basis.data()));
        }
#pragma omp critical
        best = std::max(best, local);
    }
    return BigInt(n - best);
}

std::map<long long, long long> weight_distribution_impl(const GeneratorMatrix& code,
                                                        const Budget& budget, bool parallel) {
    const FieldSpec& field = code.field();
    const int k = code.k(), n = code.n();
    budget.check_subspaces(gaussian_binomial(k, 1, BigInt(field.q())));
    const HyperplaneEnumerator hyperplanes(k, field);
    const unsigned long long total = hyperplanes.count_ull();
    const std::vector<Fq> cols = code.columns_as_rows();

    std::vector<long long> hist(static_cast<size_t>(n) + 1, 0);
#pragma omp parallel if (parallel)
    {
        std::vector<Fq> f(static_cast<size_t>(k));
        std::vector<long long> local(static_cast<size_t>(n) + 1, 0);
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            hyperplanes.decode(static_cast<unsigned long long>(idx), f.data());
            int zeros = columns_on_hyperplane(cols.data(), n, k, field, f.data());
            ++local[static_cast<size_t>(n - zeros)];
        }
#pragma omp critical
        for (size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
    }

    std::map<long long, long long> dist;
    dist[0] = 1;
    const long long scale = field.q() - 1;
    for (size_t w = 1; w < hist.size(); ++w)
        if (hist[w] != 0) dist[static_cast<long long>(w)] += hist[w] * scale;
    // A functional can vanish on every column only if it is zero, which is
    // excluded, so hist[0] never contributes to weight 0.
    if (hist[0] != 0) throw std::logic_error("nonzero functional vanished on all columns (bug)");
    return dist;
}

}  // namespace

BigInt min_distance_bruteforce(const GeneratorMatrix& code, const Budget& budget) {
    return min_distance_impl(code, budget, true);
}

BigInt min_distance_bruteforce_serial(const GeneratorMatrix& code, const Budget& budget) {
    return min_distance_impl(code, budget, false);
}

BigInt min_distance_codeword_oracle(const GeneratorMatrix& code, const Budget& budget) {
    const FieldSpec& field = code.field();
    const int k = code.k(), n = code.n();
    budget.check_subspaces(gaussian_binomial(k, 1, BigInt(field.q())));
    const HyperplaneEnumerator messages(k, field);
    const unsigned long long total = messages.count_ull();

    std::vector<Fq> msg(static_cast<size_t>(k));
    int best = n;
    for (unsigned long long idx = 0; idx < total; ++idx) {
        messages.decode(idx, msg.data());
        int weight = 0;
        for (int j = 0; j < n; ++j) {
            Fq dot = 0;
            for (int i = 0; i < k; ++i)
                if (msg[static_cast<size_t>(i)] != 0)
                    dot = field.add(dot, field.mul(msg[static_cast<size_t>(i)], code.at(i, j)));
            if (dot != 0) ++weight;
        }
        best = std::min(best, weight);
    }
    return BigInt(best);
}

BigInt higher_weight_bruteforce(const GeneratorMatrix& code, int r, const Budget& budget) {
    return higher_weight_impl(code, r, budget, true);
}

BigInt higher_weight_bruteforce_serial(const GeneratorMatrix& code, int r, const Budget& budget) {
    return higher_weight_impl(code, r, budget, false);
}

std::map<long long, long long> weight_distribution(const GeneratorMatrix& code,
                                                   const Budget& budget) {
    return weight_distribution_impl(code, budget, true);
}

std::map<long long, long long> weight_distribution_serial(const GeneratorMatrix& code,
                                                          const Budget& budget) {
    return weight_distribution_impl(code, budget, false);
}

std::vector<IndexTuple> close_family(int l, int m, int r, bool prefer_first_branch) {
    if (l <= 1 || l >= m) throw RangeError("close family requires 1 < l < m");
    const int comax = std::max(l, m - l);
    if (r < 1 || r > comax) throw RangeError("close family requires 1 <= r <= max{l, m-l}");
    const bool first_branch = m - l > l || (m - l == l && prefer_first_branch);
    if (first_branch && r > m - l) throw RangeError("first-branch close family requires r <= m-l");
    if (!first_branch && r > l) throw RangeError("second-branch close family requires r <= l");

    std::vector<IndexTuple> family;
    for (int j = 1; j <= r + 1; ++j) {
        std::vector<int> e;
        if (first_branch) {
            // (m-l+2-j, m-l+2, m-l+3, ..., m)
            e.push_back(m - l + 2 - j);
            for (int v = m - l + 2; v <= m; ++v) e.push_back(v);
        } else {
            // (m-l, m-l+1, ..., m) with the entry m-l+j-1 removed
            for (int v = m - l; v <= m; ++v)
                if (v != m - l + j - 1) e.push_back(v);
        }
        family.emplace_back(std::move(e), m);
    }
    return family;
}

BigInt close_family_section_count(int l, int m, const FieldSpec& field, int r,
                                  const Budget& budget, bool prefer_first_branch) {
    const std::vector<IndexTuple> family = close_family(l, m, r, prefer_first_branch);
    const PluckerFrame frame(l, m);
    std::vector<int> vanish;
    for (int j = 2; j <= r + 1; ++j) vanish.push_back(frame.position(family[static_cast<size_t>(j - 1)]));

    const std::vector<PluckerPoint> points = enumerate_schubert_points(eta_tuple(l, m), field, budget);
    long count = 0;
    for (const PluckerPoint& pt : points) {
        bool in_section = true;
        for (int pos : vanish)
            if (pt.coords[static_cast<size_t>(pos)] != 0) {
                in_section = false;
                break;
            }
        if (in_section) ++count;
    }
    return BigInt(count);
}

}  // namespace schubert
