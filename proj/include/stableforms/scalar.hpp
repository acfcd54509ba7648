#ifndef STABLEFORMS_SCALAR_HPP
#define STABLEFORMS_SCALAR_HPP

#include <map>
#include <optional>
#include <string>

#include "stableforms/polynomial.hpp"

namespace stableforms {

// Element of the rational-function field Q(a12,...,a56).  Always kept in
// canonical form: gcd(num, den) = 1 (content included), den has positive
// leading coefficient, zero is 0/1.  Equality of Scalars is plain
// structural equality of the canonical representation.
class Scalar {
public:
    Scalar() : num_(), den_(Polynomial::constant(1)) {}
    Scalar(int v);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const Polynomial& p);
    Scalar(const Polynomial& num, const Polynomial& den);

    static Scalar symbol(SymbolId id);
    static Scalar coeff(int i, int j);  // a_ij

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // DivisionByZero
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    Scalar pow(unsigned e) const;
    Scalar inverse() const;  // DivisionByZero on zero

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Exact value at a rational point; PoleAtPoint when den vanishes.
    Rational eval(const std::map<SymbolId, Rational>& point) const;

    // Field substitution symbol -> Scalar; unmapped symbols stay put.
    Scalar substitute(const std::map<SymbolId, Scalar>& subs) const;

    // sqrt when *this is a perfect square in the field.
    std::optional<Scalar> sqrt_exact() const;

    std::vector<SymbolId> symbols() const;

    std::string format() const;

private:
    Polynomial num_;
    Polynomial den_;

    void reduce();
};

// Expression grammar: identifiers, integer literals, + - * / ^ with
// non-negative integer exponents, parentheses.  Throws SyntaxError with
// the offending position.
Scalar scalar_parse(const std::string& text);

inline std::string scalar_format(const Scalar& x) { return x.format(); }

}  // namespace stableforms

#endif
