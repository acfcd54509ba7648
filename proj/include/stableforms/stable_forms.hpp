#ifndef STABLEFORMS_STABLE_FORMS_HPP
#define STABLEFORMS_STABLE_FORMS_HPP

#include <map>
#include <utility>

#include "stableforms/exterior.hpp"
#include "stableforms/lie_algebra.hpp"
#include "stableforms/matrix.hpp"

namespace stableforms {

// Inverse of X -> interior(X, mu) with mu = e^{123456}.
Vec iso_lambda5(const Form& eta);

// Column j is iso_lambda5(interior(e_j, omega) ^ omega).
Mat hitchin_K(const Form& omega);

Scalar hitchin_lambda(const Mat& k);
Scalar hitchin_lambda(const Form& omega);

// K unnormalized; J = K/sqrt(|lambda|) with eps the sign of lambda, so
// J^2 = eps Id.
struct EpsStructure {
    Mat K;
    Scalar lambda;
    int eps;
    Mat J;
};

// Throws UnstableForm when lambda = 0 and NonSquareLambda when |lambda|
// has no exact square root in the field.
EpsStructure eps_structure(const Form& omega);

// (pull of f by m)_I = sum_J f_J det(m[J, I]).
Form pullback(const Mat& m, const Form& f);

Form dual_form(const Form& omega, const EpsStructure& s);

// Antisymmetric matrix W with W_ij = w(e_i, e_j).
Mat two_form_matrix(const Form& w);

struct PairReport {
    bool compatible;
    bool normalized;
    bool half_flat;
    Form dual;
};

// compatible: w ^ Omega = 0; normalized: dual(Omega) ^ Omega = 2 w^3 / 3;
// half-flat: d Omega = 0 and w ^ dw = 0.  The normalization check needs
// the eps-structure of Omega, so with want_normalized it throws
// UnstableForm on lambda = 0; without it, normalized is reported false
// and dual is the zero form.
PairReport pair_report(const LieAlg& L, const Form& omega2,
                       const Form& omega3, bool want_normalized = true);

// Nullspaces of J - Id and J + Id; requires eps = +1.
std::pair<Subspace, Subspace> eigen_distributions(const EpsStructure& s);

struct BracketWitness {
    bool closed;
    Vec x, y, image;  // on failure: [x, y] = image lies outside the subspace
};

BracketWitness bracket_closed(const LieAlg& L, const Subspace& w);

// Nonzero values N(e_i, e_j) for i < j, keyed by (i, j).  The para and
// complex cases use their respective four-bracket formulas.
using NijenhuisTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

NijenhuisTable nijenhuis(const LieAlg& L, const EpsStructure& s);

inline bool is_integrable(const NijenhuisTable& t) { return t.empty(); }

}  // namespace stableforms

#endif
