#include "motivic/fp.hpp"

#include <string>

#include "motivic/errors.hpp"

namespace motivic {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_modulus(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 15)) throw DomainError("modulus must be < 2^15");
}

FpScalar fp(long long value, std::uint32_t p) {
    check_modulus(p);
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r), p};
}

namespace {

void check_same_field(FpScalar a, FpScalar b) {
    if (a.p != b.p) throw DimensionMismatchError("scalars from different prime fields");
}

}  // namespace

FpScalar fp_add(FpScalar a, FpScalar b) {
    check_same_field(a, b);
    std::uint32_t s = a.value + b.value;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
}

FpScalar fp_sub(FpScalar a, FpScalar b) {
    check_same_field(a, b);
    std::uint32_t s = a.value + a.p - b.value;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
}

FpScalar fp_mul(FpScalar a, FpScalar b) {
    check_same_field(a, b);
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) * b.value) % a.p),
            a.p};
}

FpScalar fp_neg(FpScalar a) { return {a.value == 0 ? 0 : a.p - a.value, a.p}; }

FpScalar fp_inv(FpScalar a) {
    if (a.value == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(a.p));
    // Extended Euclid on (p, a).
    long long t = 0, t_new = 1;
    long long r = a.p, r_new = a.value;
    while (r_new != 0) {
        long long q = r / r_new;
        long long tmp = t - q * t_new;
        t = t_new;
        t_new = tmp;
        tmp = r - q * r_new;
        r = r_new;
        r_new = tmp;
    }
    if (t < 0) t += a.p;
    return {static_cast<std::uint32_t>(t), a.p};
}

FpMatrix::FpMatrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    check_modulus(p);
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FpMatrix FpMatrix::identity(int n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

void FpMatrix::set(int i, int j, long long value) {
    long long r = value % static_cast<long long>(p_);
    if (r < 0) r += p_;
    e_[index(i, j)] = static_cast<std::uint32_t>(r);
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set_raw(j, i, at(i, j));
    return t;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_ || a.p_ != b.p_)
        throw DimensionMismatchError("matrix product shape or modulus mismatch");
    FpMatrix r(a.rows_, b.cols_, a.p_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < a.cols_; ++k)
                acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            r.set_raw(i, j, static_cast<std::uint32_t>(acc % a.p_));
        }
    return r;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_)
        throw DimensionMismatchError("matrix sum shape or modulus mismatch");
    FpMatrix r(a.rows_, a.cols_, a.p_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            std::uint32_t s = a.at(i, j) + b.at(i, j);
            if (s >= a.p_) s -= a.p_;
            r.set_raw(i, j, s);
        }
    return r;
}

int reduced_row_echelon(FpMatrix& m) {
    const std::uint32_t p = m.modulus();
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j) {
                std::uint32_t tmp = m.at(rank, j);
                m.set_raw(rank, j, m.at(pivot, j));
                m.set_raw(pivot, j, tmp);
            }
        std::uint32_t inv = fp_inv({m.at(rank, col), p}).value;
        for (int j = col; j < m.cols(); ++j)
            m.set_raw(rank, j,
                      static_cast<std::uint32_t>(
                          (static_cast<std::uint64_t>(m.at(rank, j)) * inv) % p));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank) continue;
            std::uint64_t f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j) {
                std::uint64_t v = m.at(i, j) + p - (f * m.at(rank, j)) % p;
                m.set_raw(i, j, static_cast<std::uint32_t>(v % p));
            }
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(FpMatrix m) { return reduced_row_echelon(m); }

}  // namespace motivic
