#pragma once

#include <cstdint>
#include <vector>

namespace motivic {

/// True iff p is prime. Moduli used by the library must also be < 2^15 so
/// that products fit comfortably in native words before reduction.
bool is_prime(std::uint32_t p);

/// Checks p prime and < 2^15; DomainError otherwise.
void check_modulus(std::uint32_t p);

/// A scalar of F_p carrying its modulus.
struct FpScalar {
    std::uint32_t value = 0;
    std::uint32_t p = 2;

    friend bool operator==(const FpScalar& a, const FpScalar& b) {
        return a.value == b.value && a.p == b.p;
    }
};

/// Reduction of an arbitrary signed value into F_p.
FpScalar fp(long long value, std::uint32_t p);

FpScalar fp_add(FpScalar a, FpScalar b);
FpScalar fp_sub(FpScalar a, FpScalar b);
FpScalar fp_mul(FpScalar a, FpScalar b);
FpScalar fp_neg(FpScalar a);
/// Multiplicative inverse; DivisionByZeroError for a = 0.
FpScalar fp_inv(FpScalar a);

/// Dense row-major matrix over F_p. All entries share the matrix modulus and
/// are stored reduced.
class FpMatrix {
public:
    FpMatrix(int rows, int cols, std::uint32_t p);
    static FpMatrix identity(int n, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t at(int i, int j) const { return e_[index(i, j)]; }
    FpScalar scalar_at(int i, int j) const { return {at(i, j), p_}; }
    /// Stores value reduced mod p (accepts negatives).
    void set(int i, int j, long long value);
    /// Stores an already-reduced value; no range check beyond debug builds.
    void set_raw(int i, int j, std::uint32_t value) { e_[index(i, j)] = value; }

    const std::uint32_t* row(int i) const { return e_.data() + index(i, 0); }
    std::uint32_t* row(int i) { return e_.data() + index(i, 0); }

    FpMatrix transposed() const;

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FpMatrix& a, const FpMatrix& b) { return !(a == b); }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_;
    int cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> e_;
};

/// Row rank by Gaussian elimination (equals column rank).
int matrix_rank(FpMatrix m);

/// Reduces m in place to reduced row echelon form; returns the rank.
int reduced_row_echelon(FpMatrix& m);

}  // namespace motivic
