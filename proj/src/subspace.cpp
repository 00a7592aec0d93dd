#include "motivic/subspace.hpp"

#include <string>

namespace motivic {

Subspace subspace_from_rref(FpMatrix rref) { return Subspace(std::move(rref)); }

Subspace Subspace::from_span(FpMatrix rows) {
    const int k = rows.rows();
    if (reduced_row_echelon(rows) != k)
        throw DomainError("spanning rows are linearly dependent");
    return Subspace(std::move(rows));
}

bool is_reduced_row_echelon(const FpMatrix& m) {
    int prev_pivot = -1;
    for (int i = 0; i < m.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0 || pivot <= prev_pivot || m.at(i, pivot) != 1) return false;
        for (int r = 0; r < m.rows(); ++r)
            if (r != i && m.at(r, pivot) != 0) return false;
        prev_pivot = pivot;
    }
    return true;
}

namespace detail {

void check_enumeration_domain(int k, int n, std::uint32_t p) {
    if (k < 0 || k > n || n > 7)
        throw DomainError("subspace enumeration requires 0 <= k <= n <= 7");
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw DomainError("subspace enumeration supports p in {2,3,5,7}");
}

std::vector<PivotPattern> pivot_patterns(int k, int n, std::uint32_t p) {
    std::vector<PivotPattern> out;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;

    auto emit = [&] {
        PivotPattern pat;
        pat.pivots = pivots;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_pivot[static_cast<std::size_t>(j)]) pat.free_cells.emplace_back(i, j);
        pat.size = 1;
        for (std::size_t t = 0; t < pat.free_cells.size(); ++t) pat.size *= p;
        out.push_back(std::move(pat));
    };

    if (k == 0) {
        emit();
        return out;
    }
    // Lexicographic combinations of pivot columns.
    for (;;) {
        emit();
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

std::uint64_t subspace_count(int k, int n, std::uint32_t p) {
    detail::check_enumeration_domain(k, n, p);
    std::uint64_t total = 0;
    for (const auto& pat : detail::pivot_patterns(k, n, p)) total += pat.size;
    return total;
}

std::vector<Subspace> enumerate_subspaces(int k, int n, std::uint32_t p) {
    std::vector<Subspace> out;
    for_each_subspace(k, n, p, [&](const FpMatrix& m) { out.push_back(subspace_from_rref(m)); });
    return out;
}

}  // namespace motivic
