#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/fp.hpp"

namespace motivic {

/// k-dimensional subspace of F_p^n held by its unique reduced-row-echelon
/// basis. Two Subspace values are equal iff they are the same subspace.
class Subspace {
public:
    /// Canonicalizes the row span of `rows`; DomainError if the rows are
    /// linearly dependent (the span would have smaller dimension).
    static Subspace from_span(FpMatrix rows);

    int k() const { return basis_.rows(); }
    int n() const { return basis_.cols(); }
    std::uint32_t modulus() const { return basis_.modulus(); }
    const FpMatrix& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    friend Subspace subspace_from_rref(FpMatrix rref);
    explicit Subspace(FpMatrix basis) : basis_(std::move(basis)) {}
    FpMatrix basis_;
};

/// True iff m is in reduced row echelon form with no zero rows.
bool is_reduced_row_echelon(const FpMatrix& m);

namespace detail {

/// One Schubert cell: the set of RREF bases with a fixed pivot-column set.
/// Cells are enumerated in lexicographic order of the pivot tuple; within a
/// cell the free entries run through base-p counting order (the last free
/// cell in row-major order is the fastest digit).
struct PivotPattern {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free_cells;  // row-major (row, col)
    std::uint64_t size;                           // p^free_cells.size()
};

std::vector<PivotPattern> pivot_patterns(int k, int n, std::uint32_t p);
void check_enumeration_domain(int k, int n, std::uint32_t p);

template <class Fn>
void for_each_in_pattern(const PivotPattern& pat, std::uint32_t p, std::uint64_t lo,
                         std::uint64_t hi, FpMatrix& scratch, Fn&& fn) {
    const int k = scratch.rows();
    const int n = scratch.cols();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) scratch.set_raw(i, j, 0);
    for (int i = 0; i < k; ++i) scratch.set_raw(i, pat.pivots[static_cast<std::size_t>(i)], 1);

    const std::size_t nfree = pat.free_cells.size();
    std::vector<std::uint32_t> digits(nfree, 0);
    std::uint64_t rem = lo;
    for (std::size_t t = nfree; t-- > 0;) {
        digits[t] = static_cast<std::uint32_t>(rem % p);
        rem /= p;
    }
    for (std::size_t t = 0; t < nfree; ++t)
        scratch.set_raw(pat.free_cells[t].first, pat.free_cells[t].second, digits[t]);

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        fn(static_cast<const FpMatrix&>(scratch));
        std::size_t t = nfree;
        while (t-- > 0) {
            if (++digits[t] == p) {
                digits[t] = 0;
                scratch.set_raw(pat.free_cells[t].first, pat.free_cells[t].second, 0);
            } else {
                scratch.set_raw(pat.free_cells[t].first, pat.free_cells[t].second, digits[t]);
                break;
            }
        }
    }
}

}  // namespace detail

/// Total number of k-dimensional subspaces of F_p^n, summed over Schubert
/// cells (no polynomial evaluation involved).
std::uint64_t subspace_count(int k, int n, std::uint32_t p);

/// Streams every k-dimensional subspace of F_p^n exactly once as its RREF
/// basis matrix. The matrix reference passed to fn is a reused scratch
/// buffer; copy it if it must outlive the call. Deterministic order:
/// lexicographic pivot patterns, base-p counting of free entries.
/// DomainError unless 0 <= k <= n <= 7 and p in {2,3,5,7}.
template <class Fn>
void for_each_subspace(int k, int n, std::uint32_t p, Fn&& fn) {
    detail::check_enumeration_domain(k, n, p);
    FpMatrix scratch(k, n, p);
    for (const auto& pat : detail::pivot_patterns(k, n, p))
        detail::for_each_in_pattern(pat, p, 0, pat.size, scratch, fn);
}

/// Streams the global-index range [lo, hi) of the same enumeration.
template <class Fn>
void for_each_subspace_range(int k, int n, std::uint32_t p, std::uint64_t lo, std::uint64_t hi,
                             Fn&& fn) {
    detail::check_enumeration_domain(k, n, p);
    FpMatrix scratch(k, n, p);
    std::uint64_t base = 0;
    for (const auto& pat : detail::pivot_patterns(k, n, p)) {
        const std::uint64_t cell_lo = base, cell_hi = base + pat.size;
        base = cell_hi;
        if (cell_hi <= lo || cell_lo >= hi) continue;
        const std::uint64_t a = std::max(lo, cell_lo) - cell_lo;
        const std::uint64_t b = std::min(hi, cell_hi) - cell_lo;
        detail::for_each_in_pattern(pat, p, a, b, scratch, fn);
    }
}

/// Partitioned fold over the full enumeration. fold(state, basis) is applied
/// per subspace; chunk results are merged in chunk order, so any thread
/// count (including 1) produces the identical result as long as merge is
/// associative. R must be copyable.
template <class R, class Fold, class Merge>
R reduce_subspaces(int k, int n, std::uint32_t p, int threads, R init, Fold&& fold,
                   Merge&& merge) {
    const std::uint64_t total = subspace_count(k, n, p);
    if (threads <= 1 || total < 4096) {
        R state = init;
        for_each_subspace(k, n, p, [&](const FpMatrix& m) { fold(state, m); });
        return state;
    }
    const std::uint64_t nchunks =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads) * 8, total);
    std::vector<R> partial(static_cast<std::size_t>(nchunks), init);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                const std::uint64_t lo = total * c / nchunks;
                const std::uint64_t hi = total * (c + 1) / nchunks;
                R& state = partial[static_cast<std::size_t>(c)];
                for_each_subspace_range(k, n, p, lo, hi,
                                        [&](const FpMatrix& m) { fold(state, m); });
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    R state = init;
    for (auto& part : partial) merge(state, std::move(part));
    return state;
}

/// Materialized enumeration, for tests and small parameter sets.
std::vector<Subspace> enumerate_subspaces(int k, int n, std::uint32_t p);

}  // namespace motivic
