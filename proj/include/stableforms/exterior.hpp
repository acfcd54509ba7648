#ifndef STABLEFORMS_EXTERIOR_HPP
#define STABLEFORMS_EXTERIOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stableforms/lie_algebra.hpp"
#include "stableforms/scalar.hpp"

namespace stableforms {

// Strictly increasing 0-based index list.
using MultiIndex = std::vector<std::size_t>;

// Left-invariant k-form: coefficients on the basis e^{i1...ik}.
class Form {
public:
    Form(std::size_t dim, std::size_t degree);

    // 1-based indices, e.g. basis(6, {1,3,6}) is e^{136}.
    static Form basis(std::size_t dim, const std::vector<int>& indices);

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }

    const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(const MultiIndex& idx) const;

    // idx must be strictly increasing; zero sums are dropped.
    void add_term(const MultiIndex& idx, const Scalar& c);

    bool is_zero() const { return coeffs_.empty(); }

    Form operator-() const;
    Form operator+(const Form& rhs) const;
    Form operator-(const Form& rhs) const;
    Form scaled(const Scalar& c) const;

    bool operator==(const Form& rhs) const;
    bool operator!=(const Form& rhs) const { return !(*this == rhs); }

    Form substitute(const std::map<SymbolId, Scalar>& subs) const;

private:
    std::size_t dim_;
    std::size_t degree_;
    std::map<MultiIndex, Scalar> coeffs_;
};

Form wedge(const Form& a, const Form& b);

Form interior(const Vec& x, const Form& a);

// Differential determined by the structure constants; on basis 1-forms
// de^k = -sum_{i<j} c(i,j,k) e^{ij}.
Form cediff(const LieAlg& L, const Form& a);

bool is_closed(const LieAlg& L, const Form& a);

// sum_{i<j} a_ij e^{ij} over the canonical symbols.
Form generic_two_form(std::size_t dim = 6);

Form two_form_cube(const Form& w);

// Certificate is the e^{1...6} coefficient of the cube; nondegenerate
// iff it is a nonzero Scalar.
std::pair<bool, Scalar> is_nondegenerate2(const Form& w);

// Nonzero coefficients of w ^ dw, keyed order of the 5-form basis.
std::vector<Scalar> wedge_closure_conditions(const LieAlg& L, const Form& w);

// Exact solution of {dw = 0} over the generic 2-form: each pivot symbol
// mapped to its expression in the free symbols (pivots chosen largest-first
// so lower-index symbols stay free).
struct ClosedFamily {
    std::map<SymbolId, Scalar> substitution;
    std::vector<SymbolId> free_symbols;
    Form form{0, 2};  // generic 2-form with the substitution applied
};

ClosedFamily closed_two_form_family(const LieAlg& L, std::size_t dim = 6);

// Literal grammar: signed terms `coeff*e<ij...>` with strictly increasing
// digit indices; coefficient expressions use the scalar grammar.
Form parse_form(const std::string& text, std::size_t dim = 6);

std::string format_form(const Form& f);

}  // namespace stableforms

#endif
