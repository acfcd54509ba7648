#ifndef STABLEFORMS_LIE_ALGEBRA_HPP
#define STABLEFORMS_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stableforms/matrix.hpp"
#include "stableforms/scalar.hpp"

namespace stableforms {

using Vec = std::vector<Scalar>;

// Lie algebra by structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.
// Indices are 0-based internally; the public text grammars are 1-based.
class LieAlg {
public:
    explicit LieAlg(std::size_t dim);

    std::size_t dim() const { return dim_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;

    // Sets [e_i, e_j] and the antisymmetric mirror.
    void set_bracket(std::size_t i, std::size_t j, const Vec& value);

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(std::size_t i, std::size_t j) const;

    bool operator==(const LieAlg& rhs) const;
    bool operator!=(const LieAlg& rhs) const { return !(*this == rhs); }

private:
    std::size_t dim_;
    std::vector<Scalar> c_;
};

// Subspace kept as a reduced-echelon row basis; equality is span equality.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

private:
    Mat basis_;
};

// brackets: 1-based (i, j, value) with i < j; unspecified brackets vanish.
LieAlg from_brackets(
    std::size_t dim,
    const std::vector<std::tuple<int, int, Vec>>& brackets);

// Tuple notation "(0,0,12,13,14+23,34-25)": entry k gives the differential
// de^k directly, so coefficient t on e^{ij} stores c(i,j,k) = -t.
LieAlg parse_tuple(const std::string& text);

struct JacobiDefect {
    std::size_t i, j, k;
    Vec defect;
};

// Empty iff the Jacobi identity holds for all basis triples.
std::vector<JacobiDefect> jacobi_defect(const LieAlg& L);

// Descending series g = C^0 > C^1 = [g, C^0] > ..., listed until it
// stabilizes (ends with the zero subspace exactly when nilpotent).
std::vector<Subspace> lower_central_series(const LieAlg& L);

// D^0 = g, D^{k+1} = [D^k, D^k], until stabilization.
std::vector<Subspace> derived_series(const LieAlg& L);

// 0 = Z_0 < Z_1 = center < Z_2 < ..., Z_l = {X | [X, g] in Z_{l-1}}.
std::vector<Subspace> ascending_central_series(const LieAlg& L);

Subspace center(const LieAlg& L);

// Least s with C^s = 0; empty when the series stabilizes above zero.
std::optional<int> nilpotency_step(const LieAlg& L);

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series);

}  // namespace stableforms

#endif
