#pragma once

#include "motivic/poly.hpp"

namespace motivic {

/// [A^n] = L^n. DomainError for n < 0.
Poly affine_class(int n);

/// [P^n] = 1 + L + ... + L^n; n = -1 is the empty space (zero class).
/// DomainError for n < -1. Satisfies [P^n] - [P^(n-1)] = L^n.
Poly projective_class(int n);

/// Class of the Grassmannian of k-planes in n-space, computed by the
/// hyperplane-section recursion
///     [G(k,n)] = [G(k,n-1)] + L^(n-k) * [G(k-1,n-1)]
/// with base cases G(0,n) = G(k,k) = 1, G(k,n) = 0 for k > n and
/// G(1,n) = [P^(n-1)]. Memoized; DomainError for negative arguments.
Poly grassmannian_class(int k, int n);

/// Closed form for [G(2,n)], n >= 4:
///   even n: [P^(n-2)] * (1 + L^2 + ... + L^(n-2))
///   odd  n: [P^(n-1)] * (1 + L^2 + ... + L^(n-3))
/// DomainError for n < 4.
Poly grassmannian_g2_closed_form(int n);

/// Gaussian binomial coefficient: the q-analog of (n choose k) as a
/// polynomial in L, computed by the product formula with an exact division
/// after every numerator factor. Independent of the Grassmannian recursion;
/// equals grassmannian_class(k, n) for all 0 <= k <= n. Zero for k > n.
Poly gaussian_binomial(int k, int n);

}  // namespace motivic
