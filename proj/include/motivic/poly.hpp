#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace motivic {

struct PolySplit;

/// Dense univariate polynomial in the Lefschetz class L with exact
/// arbitrary-precision integer coefficients: an element of Z[L].
///
/// Canonical form: the highest stored coefficient is nonzero, the zero
/// polynomial stores nothing. Values are immutable once built; every
/// operation returns a fresh polynomial, so sharing across threads is safe.
class Poly {
public:
    Poly() = default;
    Poly(long constant) : Poly(mpz_class(constant)) {}
    explicit Poly(mpz_class constant);
    /// Coefficients in ascending powers of L; trailing zeros are trimmed.
    explicit Poly(std::vector<mpz_class> coeffs);

    /// The class L of the affine line.
    static Poly lefschetz() { return monomial(1); }
    static Poly monomial(int degree, mpz_class coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of L^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Exact value of the polynomial at the integer q (Horner).
    mpz_class eval(const mpz_class& q) const;

    /// Unique decomposition p = low + L^k * high with deg(low) < k.
    PolySplit split_at(int k) const;

    Poly pow(unsigned exponent) const;

    /// Descending powers, e.g. "L^10 - L^9 - L^8 + L^7"; "0" when zero.
    std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<mpz_class> coeffs_;  // coeffs_[i] multiplies L^i
};

struct PolySplit {
    Poly low;   // deg(low) < k
    Poly high;  // the original = low + L^k * high
};

/// Quotient of an exact division a / b in Z[L]; throws InternalError if the
/// division leaves a remainder (valid callers never produce one).
Poly divide_exact(const Poly& a, const Poly& b);

}  // namespace motivic
