#include "motivic/skew.hpp"

#include <string>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

SkewForm::SkewForm(FpMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw NotAlternatingError("form matrix must be square");
    const std::uint32_t p = matrix_.modulus();
    for (int i = 0; i < matrix_.rows(); ++i) {
        if (matrix_.at(i, i) != 0) throw NotAlternatingError("nonzero diagonal entry");
        for (int j = i + 1; j < matrix_.cols(); ++j) {
            std::uint32_t a = matrix_.at(i, j);
            std::uint32_t b = matrix_.at(j, i);
            if ((a + b) % p != 0) throw NotAlternatingError("matrix is not antisymmetric");
        }
    }
}

SkewForm SkewForm::zero(int n, std::uint32_t p) { return SkewForm(FpMatrix(n, n, p)); }

SkewForm SkewForm::standard(int n, int rank, std::uint32_t p) {
    if (rank < 0 || rank > n || rank % 2 != 0)
        throw DomainError("standard form rank must be even and at most the dimension");
    FpMatrix m(n, n, p);
    const int half = rank / 2;
    for (int i = 0; i < half; ++i) {
        m.set_raw(i, half + i, 1);
        m.set_raw(half + i, i, p - 1);
    }
    return SkewForm(std::move(m));
}

SkewForm SkewForm::from_upper_triangle(int n, std::uint32_t p,
                                       std::span<const std::uint32_t> upper) {
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (upper.size() != expected)
        throw DimensionMismatchError("upper triangle needs n(n-1)/2 entries");
    FpMatrix m(n, n, p);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint32_t v = upper[idx++] % p;
            m.set_raw(i, j, v);
            m.set_raw(j, i, v == 0 ? 0 : p - v);
        }
    return SkewForm(std::move(m));
}

FpScalar evaluate_form(const SkewForm& w, std::span<const std::uint32_t> u,
                       std::span<const std::uint32_t> v) {
    const int n = w.dim();
    if (u.size() != static_cast<std::size_t>(n) || v.size() != static_cast<std::size_t>(n))
        throw DimensionMismatchError("vector length differs from form dimension");
    const std::uint32_t p = w.modulus();
    // Products are < 2^30 and there are at most 49 of them per row sum, so a
    // single 64-bit accumulator with one final reduction is exact.
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] == 0) continue;
        std::uint64_t row = 0;
        const std::uint32_t* wr = w.matrix().row(i);
        for (int j = 0; j < n; ++j)
            row += static_cast<std::uint64_t>(wr[j]) * v[static_cast<std::size_t>(j)];
        acc += (row % p) * u[static_cast<std::size_t>(i)];
    }
    return {static_cast<std::uint32_t>(acc % p), p};
}

namespace {

// w(a, b) for coordinate vectors.
std::uint32_t pair_value(const SkewForm& w, const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
    return evaluate_form(w, a, b).value;
}

}  // namespace

CongruenceNormalForm congruence_normal_form(const SkewForm& w) {
    const int n = w.dim();
    const std::uint32_t p = w.modulus();

    std::vector<std::vector<std::uint32_t>> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(std::move(e));
    }

    std::vector<std::vector<std::uint32_t>> first_of_pair, second_of_pair;
    while (true) {
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < basis.size() && pi < 0; ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (pair_value(w, basis[i], basis[j]) != 0) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) break;

        std::vector<std::uint32_t> u = basis[static_cast<std::size_t>(pi)];
        std::vector<std::uint32_t> v = basis[static_cast<std::size_t>(pj)];
        basis.erase(basis.begin() + pj);
        basis.erase(basis.begin() + pi);

        // Scale v so that w(u, v) = 1.
        std::uint32_t inv = fp_inv({pair_value(w, u, v), p}).value;
        for (auto& c : v) c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * inv) % p);

        // Make the rest orthogonal to the hyperbolic pair:
        // x -> x - w(u,x) * v + w(v,x) * u.
        for (auto& x : basis) {
            std::uint64_t cu = pair_value(w, u, x);
            std::uint64_t cv = pair_value(w, v, x);
            for (int t = 0; t < n; ++t) {
                std::uint64_t val = x[static_cast<std::size_t>(t)];
                val += (p - (cu * v[static_cast<std::size_t>(t)]) % p);
                val += (cv * u[static_cast<std::size_t>(t)]) % p;
                x[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(val % p);
            }
        }
        first_of_pair.push_back(std::move(u));
        second_of_pair.push_back(std::move(v));
    }

    FpMatrix transform(n, n, p);
    int col = 0;
    auto emit = [&](const std::vector<std::uint32_t>& b) {
        for (int i = 0; i < n; ++i) transform.set_raw(i, col, b[static_cast<std::size_t>(i)]);
        ++col;
    };
    for (const auto& b : first_of_pair) emit(b);
    for (const auto& b : second_of_pair) emit(b);
    for (const auto& b : basis) emit(b);

    return {std::move(transform), static_cast<int>(2 * first_of_pair.size())};
}

}  // namespace motivic
