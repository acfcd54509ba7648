#ifndef STABLEFORMS_CURVATURE_HPP
#define STABLEFORMS_CURVATURE_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "stableforms/exterior.hpp"
#include "stableforms/lie_algebra.hpp"
#include "stableforms/matrix.hpp"
#include "stableforms/stable_forms.hpp"

namespace stableforms {

// Invertible symmetric bilinear form together with its exact inverse.
struct Metric {
    Mat g;
    Mat ginv;
};

// Wraps a symmetric matrix; SingularMetric when it has no inverse.
Metric metric_from(const Mat& g);

// g(X, Y) = w(X, JY), i.e. g = W J for the coefficient matrix W of w.
// AsymmetricResult unless w(JX, JY) = -eps w(X, Y), which is exactly
// what makes the product symmetric; SingularMetric when w degenerates.
Metric associated_metric(const Form& w, const EpsStructure& s);

// Cubical array; at(i, j, n) stores the connection component Gamma^n_ij.
class Tensor3 {
public:
    explicit Tensor3(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k);
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const;

private:
    std::size_t dim_;
    std::vector<Scalar> data_;
};

// Rank-4 array; at(i, j, k, s) stores R^s_ijk (contravariant slot last).
class Tensor4 {
public:
    explicit Tensor4(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t s);
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t s) const;

private:
    std::size_t dim_;
    std::vector<Scalar> data_;
};

// Gamma^n_ij = 1/2 g^{kn} (g_pk C^p_ij + g_pj C^p_ki + g_ip C^p_kj).
Tensor3 christoffel(const LieAlg& L, const Metric& m);

// R^s_ijk = Gamma^s_ip Gamma^p_jk - Gamma^s_jp Gamma^p_ik
//           - C^p_ij Gamma^s_pk.
Tensor4 riemann(const LieAlg& L, const Tensor3& gamma);

// Ric_nm = sum_i R^i_inm.
Mat ricci(const Tensor4& r);

Mat ricci_operator(const Metric& m, const Mat& ric);

Scalar scalar_curvature(const Metric& m, const Mat& ric);

// Exact proportionality Ric = c g over the field (c = 0 counts).
bool is_einstein(const Metric& m, const Mat& ric);

struct CurvatureReport {
    Tensor3 gamma;
    Tensor4 riem;
    Mat ric;
    Mat ricci_op;
    Scalar scalar;
    bool einstein;
    std::pair<int, int> signature;
};

// Full stack at once; signature is taken at the base sample point.
CurvatureReport curvature_report(const LieAlg& L, const Metric& m,
                                 int retry_budget = 16);

// Symbols appearing in any entry, ascending by id (= canonical order).
std::vector<SymbolId> matrix_symbols(const Mat& m);

// Fixed generic assignment: the k-th canonical coefficient symbol gets
// the k-th prime of 2, 3, 5, ... regardless of which symbols appear.
std::map<SymbolId, Rational> base_point(const std::vector<SymbolId>& symbols);

// The base point followed by copies whose last symbol steps through the
// primes unused by the base assignment, `count` points in total.
std::vector<std::map<SymbolId, Rational>> sample_points(
    const std::vector<SymbolId>& symbols, std::size_t count);

// Exact inertia of g at the point; poles and degenerate evaluations step
// the last assignment like sample_points does, at most `retry_budget`
// extra attempts before DegeneratePoint.
std::pair<int, int> signature_at(const Metric& m,
                                 const std::map<SymbolId, Rational>& point,
                                 int retry_budget = 16);

// Signatures at `count` deterministic generic points of the metric.
std::vector<std::pair<int, int>> signature_samples(const Metric& m,
                                                   std::size_t count = 3,
                                                   int retry_budget = 16);

}  // namespace stableforms

#endif
