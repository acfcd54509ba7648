#ifndef STABLEFORMS_POLYNOMIAL_HPP
#define STABLEFORMS_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stableforms/rational.hpp"
#include "stableforms/symbols.hpp"

namespace stableforms {

// Exponent vector indexed by SymbolId; entries past the stored length are 0.
using ExpVec = std::vector<unsigned>;

// Graded lexicographic order: total degree first, ties broken by the
// exponent of a12, then a13, ... (table order, first symbol most
// significant).  Returns <0, 0, >0 like a comparator.
int grlex_compare(const ExpVec& a, const ExpVec& b);

// Multivariate polynomial over Q with terms kept in descending grlex
// order and no zero coefficients.
class Polynomial {
public:
    struct Term {
        ExpVec exps;
        Rational coeff;
    };

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial variable(SymbolId id);
    static Polynomial monomial(const ExpVec& exps, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Rational& constant_value() const;

    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    unsigned total_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Positive rational c with (*this)/c integer-coefficient and content 1.
    Rational content() const;
    Polynomial primitive_part() const;

    // Quotient when g divides *this exactly, else nullopt.
    static std::optional<Polynomial> divide_exact(const Polynomial& f,
                                                  const Polynomial& g);

    // Primitive gcd with positive leading coefficient (subresultant PRS).
    static Polynomial gcd(const Polynomial& f, const Polynomial& g);

    // Exact square root in Q[a..] when one exists.
    std::optional<Polynomial> sqrt_exact() const;

    Rational eval(const std::map<SymbolId, Rational>& point) const;
    std::vector<SymbolId> symbols() const;

    std::string format() const;

private:
    std::vector<Term> terms_;

    void insert_term(const ExpVec& exps, const Rational& coeff);
    friend class PolyBuilder;
};

// Accumulates terms out of order, then yields a canonical Polynomial.
class PolyBuilder {
public:
    void add(const ExpVec& exps, const Rational& coeff);
    Polynomial build();

private:
    std::map<ExpVec, Rational> acc_;
};

}  // namespace stableforms

#endif
