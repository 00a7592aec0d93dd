#include "motivic/poly.hpp"

#include <sstream>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

Poly::Poly(mpz_class constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, mpz_class coeff) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    Poly r;
    if (coeff != 0) {
        r.coeffs_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
        r.coeffs_.back() = std::move(coeff);
    }
    return r;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const mpz_class& Poly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class Poly::eval(const mpz_class& q) const {
    mpz_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

PolySplit Poly::split_at(int k) const {
    if (k < 0) throw DomainError("split point must be nonnegative");
    PolySplit s;
    const auto cut = std::min(coeffs_.size(), static_cast<std::size_t>(k));
    s.low.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(cut));
    s.high.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(cut), coeffs_.end());
    s.low.trim();
    s.high.trim();
    return s;
}

Poly Poly::pow(unsigned exponent) const {
    Poly acc(1);
    for (unsigned i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InternalError("exact division by the zero polynomial");
    if (a.is_zero()) return Poly{};
    std::vector<mpz_class> rem(a.coeffs());
    const auto& d = b.coeffs();
    const int db = static_cast<int>(d.size()) - 1;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) throw InternalError("exact division has remainder");
    std::vector<mpz_class> quot(static_cast<std::size_t>(dr - db) + 1, mpz_class(0));
    for (; dr >= db; --dr) {
        if (rem[static_cast<std::size_t>(dr)] == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[static_cast<std::size_t>(dr)].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw InternalError("exact division has remainder");
        quot[static_cast<std::size_t>(dr - db)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= q * d[static_cast<std::size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) throw InternalError("exact division has remainder");
    return Poly(std::move(quot));
}

namespace {

void append_term(std::ostream& os, bool first, const mpz_class& c, int power) {
    mpz_class mag = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (power == 0) {
        os << mag.get_str();
        return;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "L";
    if (power != 1) os << "^" << power;
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        append_term(os, first, c, i);
        first = false;
    }
    return os.str();
}

}  // namespace motivic
