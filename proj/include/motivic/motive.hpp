#pragma once

#include <map>
#include <string>

#include "motivic/poly.hpp"

namespace motivic {

/// The two formal generators of the class module, spelled [X] and [Y] in the
/// expression language: the common isotropic locus of 2-planes and the
/// low-rank locus of forms. No other symbols exist.
enum class Symbol { X, Y };

std::string symbol_name(Symbol s);  // "[X]" or "[Y]"

/// L-power in the defining relation ([X] - [Y]) * L^6 = 0.
inline constexpr int kRelationPower = 6;

/// Element of the free Z[L]-module on {1, [X], [Y]}: a scalar polynomial
/// plus a polynomial coefficient per generator. Zero coefficients are not
/// stored, so componentwise equality is canonical.
class MotElem {
public:
    MotElem() = default;
    MotElem(Poly scalar);
    MotElem(long constant) : MotElem(Poly(constant)) {}
    static MotElem symbol(Symbol s);

    const Poly& scalar() const { return scalar_; }
    const Poly& sym_coeff(Symbol s) const;
    bool has_symbol(Symbol s) const { return sym_.count(s) != 0; }
    bool is_scalar() const { return sym_.empty(); }
    bool is_zero() const { return scalar_.is_zero() && sym_.empty(); }

    /// Canonical representative modulo the submodule generated by
    /// ([X] - [Y]) * L^6: the [X]-coefficient is split at L^6 and its high
    /// part is moved into the [Y]-coefficient. Idempotent, constant on
    /// cosets of the relation.
    MotElem normal_form() const;

    /// Scalar part first, then the [X] and [Y] terms, each coefficient
    /// parenthesized: e.g. "(L^6)·[X] + (-L^6)·[Y]".
    std::string str() const;

    friend MotElem operator+(const MotElem& a, const MotElem& b);
    friend MotElem operator-(const MotElem& a, const MotElem& b);
    friend MotElem operator-(const MotElem& a);
    /// Module product; at least one operand must be a pure scalar, otherwise
    /// SymbolProductError is thrown.
    friend MotElem operator*(const MotElem& a, const MotElem& b);
    friend bool operator==(const MotElem& a, const MotElem& b) {
        return a.scalar_ == b.scalar_ && a.sym_ == b.sym_;
    }
    friend bool operator!=(const MotElem& a, const MotElem& b) { return !(a == b); }

    MotElem pow(unsigned exponent) const;

private:
    void insert_nonzero(Symbol s, Poly c);

    Poly scalar_;
    std::map<Symbol, Poly> sym_;
};

/// Componentwise a + sign * b; sign must be +1 or -1.
MotElem combine(const MotElem& a, const MotElem& b, int sign);

/// The relation generator ([X] - [Y]) * L^6.
MotElem relation_element();

}  // namespace motivic
