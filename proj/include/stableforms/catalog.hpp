#ifndef STABLEFORMS_CATALOG_HPP
#define STABLEFORMS_CATALOG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stableforms/curvature.hpp"
#include "stableforms/exterior.hpp"
#include "stableforms/lie_algebra.hpp"
#include "stableforms/stable_forms.hpp"

namespace stableforms {

// The five catalogued six-dimensional nilpotent algebras, ids "g1".."g5".
const std::vector<std::string>& catalog_algebra_ids();

// Throws UnknownAlgebra for ids outside the catalog.
LieAlg catalog_algebra(const std::string& id);

// One expected-versus-computed comparison from a scenario run.  detail
// carries the computed value, or the first difference on a mismatch.
struct CheckItem {
    std::string name;
    bool matched = false;
    std::string detail;
};

// Expected results attached to a scenario; absent entries are simply not
// compared.  Matrices are full 6x6 values, eigen generators are spanning
// vectors, ricci_operator is the value after applying ricci_subs.
struct ScenarioExpected {
    std::optional<Form> d_omega;
    std::optional<Scalar> lambda;
    std::optional<int> eps;
    // J = K / structure_root.
    std::optional<Scalar> structure_root;
    std::optional<Mat> k_matrix;
    std::optional<std::vector<Vec>> eigen_plus;
    std::optional<std::vector<Vec>> eigen_minus;
    std::optional<Mat> metric;
    std::optional<Scalar> scalar;
    // Scalar curvature when the normalization root is sign-indefinite:
    // first entry applies where branch_root is positive at the pick
    // point, second where it is negative.
    std::optional<std::pair<Scalar, Scalar>> scalar_branches;
    std::optional<Scalar> branch_root;
    bool ricci_nondiagonal = false;
    std::optional<std::map<SymbolId, Scalar>> ricci_subs;
    std::optional<Mat> ricci_operator;
    // Substitution that must drive the scalar curvature to zero while the
    // Ricci tensor stays nonzero.
    std::optional<std::map<SymbolId, Scalar>> zero_scalar_subs;
    std::optional<std::pair<int, int>> signature;
    // Closed-family scenarios: pivot substitutions defining the family,
    // its free-parameter count, and the degeneracy identity omega^3 = 0.
    std::optional<std::map<SymbolId, Scalar>> closed_family;
    std::optional<std::size_t> closed_free_count;
    bool closed_cube_zero = false;
};

struct Scenario {
    std::string id;
    std::string algebra_id;
    // Substitutions taking the generic 2-form to the scenario family.
    std::map<SymbolId, Scalar> constraints;
    // Scalars assumed nonzero throughout the scenario.
    std::vector<Scalar> nondegeneracy_assumptions;
    Form omega{6, 2};
    ScenarioExpected expected;
};

// Eight computational ids followed by the five closed-family checks.
std::vector<std::string> list_scenarios();

// Throws UnknownScenario.
Scenario scenario(const std::string& id);

struct ScenarioReport {
    std::string id;
    std::string algebra_id;
    Form omega{6, 2};
    Form d_omega{6, 3};
    // e^{123456} coefficient of omega^3.
    Scalar certificate;
    std::optional<EpsStructure> structure;
    std::optional<Form> dual;
    std::optional<bool> compatible;
    std::optional<bool> normalized;
    std::optional<bool> half_flat;
    std::optional<Subspace> eigen_plus;
    std::optional<Subspace> eigen_minus;
    std::optional<bool> nijenhuis_zero;
    std::optional<Metric> metric;
    std::optional<Mat> ricci_tensor;
    std::optional<Mat> ricci_op;
    std::optional<Scalar> scalar;
    std::optional<bool> einstein;
    std::optional<std::pair<int, int>> signature;
    std::vector<CheckItem> checks;

    bool all_matched() const;
    // Null when every check matched.
    const CheckItem* first_mismatch() const;
};

// Runs the full pipeline for one scenario and compares every expected
// value.  extra_subs are applied to the family and to the expected values
// before comparing.  Arithmetic errors from degenerate substitutions
// propagate.
ScenarioReport run_scenario(const std::string& id,
                            const std::map<SymbolId, Scalar>& extra_subs = {},
                            int retry_budget = 16);

// Widens the closed family of g2 by the e36 and e56 coefficients and
// solves the wedge-closure conditions over the field generated by them.
// Returns true when every solution satisfies omega^3 = 0 identically,
// meaning the branch admits no nondegenerate compatible form.
bool g2_incompatibility_check();

}  // namespace stableforms

#endif
