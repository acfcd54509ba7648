#ifndef STABLEFORMS_MATRIX_HPP
#define STABLEFORMS_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "stableforms/scalar.hpp"

namespace stableforms {

// Dense matrix over the scalar field, value-semantic throughout.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    static Mat identity(std::size_t n);
    static Mat from_rows(std::vector<std::vector<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    Mat operator-() const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator*(const Mat& rhs) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;

    bool operator==(const Mat& rhs) const;
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

    bool is_zero() const;

    Scalar trace() const;
    Scalar det() const;

    // Reduced row echelon form; writes the rank when asked.
    Mat rref(std::size_t* rank_out = nullptr) const;
    std::size_t rank() const;

    // Basis of the right kernel, one vector per free column, in column order.
    std::vector<std::vector<Scalar>> nullspace() const;

    // Throws Error when singular.
    Mat inverse() const;

    Mat substitute(const std::map<SymbolId, Scalar>& subs) const;

    std::vector<std::vector<Scalar>> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Rows of `a` and `b` span the same subspace (compared via RREF).
bool same_row_space(const Mat& a, const Mat& b);

std::vector<Scalar> mat_apply(const Mat& m, const std::vector<Scalar>& v);

Mat submatrix(const Mat& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols);

using RatMat = std::vector<std::vector<Rational>>;

RatMat eval_matrix(const Mat& m, const std::map<SymbolId, Rational>& point);

// Sylvester inertia (n_plus, n_minus) of a symmetric rational matrix by
// exact congruence elimination.  Null directions count toward neither.
std::pair<int, int> inertia(RatMat a);

}  // namespace stableforms

#endif
