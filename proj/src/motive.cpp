#include "motivic/motive.hpp"

#include <sstream>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

std::string symbol_name(Symbol s) { return s == Symbol::X ? "[X]" : "[Y]"; }

MotElem::MotElem(Poly scalar) : scalar_(std::move(scalar)) {}

MotElem MotElem::symbol(Symbol s) {
    MotElem e;
    e.sym_.emplace(s, Poly(1));
    return e;
}

const Poly& MotElem::sym_coeff(Symbol s) const {
    static const Poly zero;
    auto it = sym_.find(s);
    return it == sym_.end() ? zero : it->second;
}

void MotElem::insert_nonzero(Symbol s, Poly c) {
    if (!c.is_zero()) sym_.emplace(s, std::move(c));
}

MotElem combine(const MotElem& a, const MotElem& b, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("combine sign must be +1 or -1");
    return sign == 1 ? a + b : a - b;
}

MotElem operator+(const MotElem& a, const MotElem& b) {
    MotElem r(a.scalar_ + b.scalar_);
    for (Symbol s : {Symbol::X, Symbol::Y}) r.insert_nonzero(s, a.sym_coeff(s) + b.sym_coeff(s));
    return r;
}

MotElem operator-(const MotElem& a, const MotElem& b) {
    MotElem r(a.scalar_ - b.scalar_);
    for (Symbol s : {Symbol::X, Symbol::Y}) r.insert_nonzero(s, a.sym_coeff(s) - b.sym_coeff(s));
    return r;
}

MotElem operator-(const MotElem& a) {
    MotElem r(-a.scalar_);
    for (Symbol s : {Symbol::X, Symbol::Y}) r.insert_nonzero(s, -a.sym_coeff(s));
    return r;
}

MotElem operator*(const MotElem& a, const MotElem& b) {
    if (!a.is_scalar() && !b.is_scalar())
        throw SymbolProductError("product of two formal generators is not defined in the class module");
    const MotElem& scalar = a.is_scalar() ? a : b;
    const MotElem& other = a.is_scalar() ? b : a;
    MotElem r(scalar.scalar_ * other.scalar_);
    for (Symbol s : {Symbol::X, Symbol::Y}) r.insert_nonzero(s, scalar.scalar_ * other.sym_coeff(s));
    return r;
}

MotElem MotElem::pow(unsigned exponent) const {
    MotElem acc(1);
    for (unsigned i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

MotElem MotElem::normal_form() const {
    auto split = sym_coeff(Symbol::X).split_at(kRelationPower);
    MotElem r(scalar_);
    r.insert_nonzero(Symbol::X, std::move(split.low));
    r.insert_nonzero(Symbol::Y,
                     sym_coeff(Symbol::Y) + Poly::monomial(kRelationPower) * split.high);
    return r;
}

MotElem relation_element() {
    return (MotElem::symbol(Symbol::X) - MotElem::symbol(Symbol::Y)) *
           MotElem(Poly::monomial(kRelationPower));
}

std::string MotElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (!scalar_.is_zero()) {
        os << scalar_.str();
        first = false;
    }
    for (Symbol s : {Symbol::X, Symbol::Y}) {
        auto it = sym_.find(s);
        if (it == sym_.end()) continue;
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")·" << symbol_name(s);
        first = false;
    }
    return os.str();
}

}  // namespace motivic
