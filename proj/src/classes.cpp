#include "motivic/classes.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

Poly affine_class(int n) {
    if (n < 0) throw DomainError("affine space dimension must be nonnegative");
    return Poly::monomial(n);
}

Poly projective_class(int n) {
    if (n < -1) throw DomainError("projective space dimension must be >= -1");
    if (n == -1) return Poly{};
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, mpz_class(1));
    return Poly(std::move(c));
}

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<int, int>, Poly> g_memo;

// Assumes g_memo_mutex is held for the whole recursion.
const Poly& grassmannian_memo(int k, int n) {
    auto it = g_memo.find({k, n});
    if (it != g_memo.end()) return it->second;
    Poly value;
    if (k > n) {
        value = Poly{};
    } else if (k == 0 || k == n) {
        value = Poly(1);
    } else if (k == 1) {
        value = projective_class(n - 1);
    } else {
        value = grassmannian_memo(k, n - 1) +
                Poly::monomial(n - k) * grassmannian_memo(k - 1, n - 1);
    }
    return g_memo.emplace(std::make_pair(k, n), std::move(value)).first->second;
}

// 1 + L^2 + L^4 + ... + L^(2*terms-2)
Poly even_power_sum(int terms) {
    std::vector<mpz_class> c(static_cast<std::size_t>(2 * terms - 1), mpz_class(0));
    for (int i = 0; i < terms; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
    return Poly(std::move(c));
}

}  // namespace

Poly grassmannian_class(int k, int n) {
    if (k < 0 || n < 0) throw DomainError("Grassmannian parameters must be nonnegative");
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return grassmannian_memo(k, n);
}

Poly grassmannian_g2_closed_form(int n) {
    if (n < 4) throw DomainError("closed form for [G(2,n)] requires n >= 4");
    if (n % 2 == 0) return projective_class(n - 2) * even_power_sum((n - 2) / 2 + 1);
    return projective_class(n - 1) * even_power_sum((n - 3) / 2 + 1);
}

Poly gaussian_binomial(int k, int n) {
    if (k < 0 || n < 0) throw DomainError("Gaussian binomial parameters must be nonnegative");
    if (k > n) return Poly{};
    Poly acc(1);
    for (int i = 1; i <= k; ++i) {
        // Multiply by (L^(n-i+1) - 1), then divide by (L^i - 1); each
        // partial product is itself a Gaussian binomial, so the division
        // is exact at every step and intermediate degrees stay small.
        acc = acc * (Poly::monomial(n - i + 1) - Poly(1));
        acc = divide_exact(acc, Poly::monomial(i) - Poly(1));
    }
    return acc;
}

}  // namespace motivic
