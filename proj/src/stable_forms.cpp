#include "stableforms/stable_forms.hpp"

#include <algorithm>

#include "stableforms/errors.hpp"

namespace stableforms {

namespace {

constexpr std::size_t kDim = 6;

Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n, Scalar(0));
    v[k] = Scalar(1);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size(), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size(), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool vec_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(),
                       [](const Scalar& c) { return c.is_zero(); });
}

}  // namespace

Vec iso_lambda5(const Form& eta) {
    if (eta.dim() != kDim || eta.degree() != 5)
        throw DegreeMismatch("iso_lambda5 needs a 5-form in dim 6");
    Vec x(kDim, Scalar(0));
    for (const auto& [idx, c] : eta.coeffs()) {
        std::size_t missing = (kDim * (kDim - 1)) / 2;
        for (std::size_t v : idx) missing -= v;
        // interior(e_m, mu) carries e^{1..6 \ m} with sign (-1)^m
        x[missing] += (missing % 2 == 0) ? c : -c;
    }
    return x;
}

Mat hitchin_K(const Form& omega) {
    if (omega.dim() != kDim || omega.degree() != 3)
        throw DegreeMismatch("hitchin operator needs a 3-form in dim 6");
    Mat k(kDim, kDim);
    for (std::size_t j = 0; j < kDim; ++j) {
        Vec col = iso_lambda5(wedge(interior(unit_vec(kDim, j), omega), omega));
        for (std::size_t i = 0; i < kDim; ++i) k.at(i, j) = col[i];
    }
    return k;
}

Scalar hitchin_lambda(const Mat& k) {
    return (k * k).trace() * Scalar(Rational(1, 6));
}

Scalar hitchin_lambda(const Form& omega) {
    return hitchin_lambda(hitchin_K(omega));
}

EpsStructure eps_structure(const Form& omega) {
    Mat k = hitchin_K(omega);
    Scalar lambda = hitchin_lambda(k);
    if (lambda.is_zero()) throw UnstableForm();
    int eps = 1;
    std::optional<Scalar> root = lambda.sqrt_exact();
    if (!root) {
        eps = -1;
        root = (-lambda).sqrt_exact();
    }
    if (!root) throw NonSquareLambda();
    return EpsStructure{k, lambda, eps, k.scaled(root->inverse())};
}

Form pullback(const Mat& m, const Form& f) {
    if (m.rows() != f.dim() || m.cols() != f.dim())
        throw DimensionMismatch("pullback matrix shape");
    const std::size_t n = f.dim();
    const std::size_t deg = f.degree();
    Form out(n, deg);
    if (f.is_zero() || deg == 0) return deg == 0 ? f : out;

    // iterate target multi-indices I in lexicographic order
    MultiIndex target(deg);
    for (std::size_t t = 0; t < deg; ++t) target[t] = t;
    while (true) {
        Scalar entry(0);
        for (const auto& [src, c] : f.coeffs())
            entry += c * submatrix(m, src, target).det();
        out.add_term(target, entry);

        std::size_t t = deg;
        while (t-- > 0) {
            if (target[t] + (deg - t) < n) {
                ++target[t];
                for (std::size_t u = t + 1; u < deg; ++u)
                    target[u] = target[u - 1] + 1;
                break;
            }
            if (t == 0) return out;
        }
    }
}

Form dual_form(const Form& omega, const EpsStructure& s) {
    return pullback(s.J, omega);
}

Mat two_form_matrix(const Form& w) {
    if (w.degree() != 2) throw DegreeMismatch("two_form_matrix needs degree 2");
    Mat m(w.dim(), w.dim());
    for (const auto& [idx, c] : w.coeffs()) {
        m.at(idx[0], idx[1]) = c;
        m.at(idx[1], idx[0]) = -c;
    }
    return m;
}

PairReport pair_report(const LieAlg& L, const Form& omega2,
                       const Form& omega3, bool want_normalized) {
    if (omega2.degree() != 2 || omega3.degree() != 3)
        throw DegreeMismatch("pair report needs a 2-form and a 3-form");
    bool compatible = wedge(omega2, omega3).is_zero();
    bool half_flat = cediff(L, omega3).is_zero() &&
                     wedge(omega2, cediff(L, omega2)).is_zero();
    if (!want_normalized)
        return PairReport{compatible, false, half_flat,
                          Form(omega3.dim(), 3)};
    EpsStructure s = eps_structure(omega3);
    Form dual = dual_form(omega3, s);
    bool normalized =
        wedge(dual, omega3) ==
        two_form_cube(omega2).scaled(Scalar(Rational(2, 3)));
    return PairReport{compatible, normalized, half_flat, dual};
}

std::pair<Subspace, Subspace> eigen_distributions(const EpsStructure& s) {
    if (s.eps != 1) throw NotParaComplex();
    Mat id = Mat::identity(s.J.rows());
    Subspace plus = Subspace::span((s.J - id).nullspace(), s.J.rows());
    Subspace minus = Subspace::span((s.J + id).nullspace(), s.J.rows());
    return {plus, minus};
}

BracketWitness bracket_closed(const LieAlg& L, const Subspace& w) {
    const Mat& basis = w.basis();
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        Vec v(basis.cols(), Scalar(0));
        for (std::size_t c = 0; c < basis.cols(); ++c) v[c] = basis.at(r, c);
        rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Vec image = L.bracket(rows[i], rows[j]);
            if (!w.contains(image))
                return BracketWitness{false, rows[i], rows[j], image};
        }
    Vec none(L.dim(), Scalar(0));
    return BracketWitness{true, none, none, none};
}

NijenhuisTable nijenhuis(const LieAlg& L, const EpsStructure& s) {
    NijenhuisTable table;
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec x = unit_vec(n, i), y = unit_vec(n, j);
            Vec px = mat_apply(s.J, x), py = mat_apply(s.J, y);
            Vec t1 = L.bracket(px, py);
            Vec t2 = L.bracket(x, y);
            Vec t3 = mat_apply(s.J, L.bracket(px, y));
            Vec t4 = mat_apply(s.J, L.bracket(x, py));
            Vec value = s.eps == 1
                            ? vec_sub(vec_sub(vec_add(t2, t1), t3), t4)
                            : vec_sub(vec_sub(vec_sub(t1, t2), t3), t4);
            if (!vec_zero(value)) table.emplace(std::make_pair(i, j), value);
        }
    return table;
}

}  // namespace stableforms
