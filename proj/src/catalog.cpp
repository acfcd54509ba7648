#include "stableforms/catalog.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <utility>

#include "stableforms/errors.hpp"
#include "stableforms/rational.hpp"
#include "stableforms/symbols.hpp"

namespace stableforms {

namespace {

Scalar sp(const std::string& text) { return scalar_parse(text); }

std::map<SymbolId, Scalar> subs_map(
    std::initializer_list<std::pair<const char*, const char*>> entries) {
    std::map<SymbolId, Scalar> m;
    for (const auto& e : entries) m[SymbolTable::intern(e.first)] = sp(e.second);
    return m;
}

void add_zeros(std::map<SymbolId, Scalar>& m,
               std::initializer_list<const char*> names) {
    for (const char* n : names) m[SymbolTable::intern(n)] = Scalar(0);
}

Mat mat6(const std::array<const char*, 36>& entries) {
    Mat m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = sp(entries[6 * i + j]);
    return m;
}

Mat diag6(const std::array<const char*, 6>& entries) {
    Mat m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) m.at(i, i) = sp(entries[i]);
    return m;
}

Vec vec6(const std::array<const char*, 6>& entries) {
    Vec v(6);
    for (std::size_t i = 0; i < 6; ++i) v[i] = sp(entries[i]);
    return v;
}

Vec basis_vec(int k) {
    Vec v(6, Scalar(0));
    v[static_cast<std::size_t>(k - 1)] = Scalar(1);
    return v;
}

Vec neg_basis_vec(int k) {
    Vec v(6, Scalar(0));
    v[static_cast<std::size_t>(k - 1)] = Scalar(-1);
    return v;
}

LieAlg build_algebra(const std::string& id) {
    auto e = basis_vec;
    auto ne = neg_basis_vec;
    if (id == "g1")
        return from_brackets(6, {{1, 2, e(3)},
                                 {1, 3, e(4)},
                                 {1, 4, e(5)},
                                 {2, 3, e(5)},
                                 {3, 4, e(6)},
                                 {2, 5, ne(6)}});
    if (id == "g2")
        return from_brackets(6, {{1, 2, e(3)},
                                 {1, 3, e(4)},
                                 {1, 4, e(5)},
                                 {3, 4, e(6)},
                                 {2, 5, ne(6)}});
    if (id == "g3")
        return from_brackets(
            6, {{1, 2, e(4)}, {1, 3, e(5)}, {1, 4, e(6)}, {3, 5, e(6)}});
    if (id == "g4")
        return from_brackets(
            6, {{1, 2, e(4)}, {2, 3, e(5)}, {1, 4, e(6)}, {3, 5, e(6)}});
    if (id == "g5")
        return from_brackets(6, {{1, 2, e(5)}, {1, 5, e(6)}, {3, 4, e(6)}});
    throw UnknownAlgebra(id);
}

Scenario make_g1_opt1() {
    Scenario sc;
    sc.id = "g1_opt1";
    sc.algebra_id = "g1";
    sc.constraints = subs_map({{"a12", "a13*a46/a56"}, {"a23", "-a14"}});
    add_zeros(sc.constraints,
              {"a15", "a16", "a24", "a25", "a26", "a34", "a35", "a36", "a45"});
    sc.nondegeneracy_assumptions = {sp("a14*a56"), sp("a46")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega =
        parse_form("-a46*e136 + a46*e245 - a56*e146 - a56*e236 + a56*e345");
    ex.lambda = sp("a46^4");
    ex.eps = 1;
    ex.structure_root = sp("a46^2");
    ex.k_matrix = mat6({"-a46^2", "-2*a46*a56", "-2*a56^2", "0",      "0", "0",
                        "0",      "a46^2",      "2*a46*a56", "2*a56^2", "0", "0",
                        "0",      "0",          "-a46^2",  "-2*a46*a56", "0", "0",
                        "0",      "0",          "0",       "a46^2",   "0", "0",
                        "0",      "0",          "0",       "0", "a46^2", "2*a56^2",
                        "0",      "0",          "0",       "0", "0", "-a46^2"});
    ex.eigen_plus = {vec6({"a56^3", "0", "-a56*a46^2", "a46^3", "0", "0"}),
                     vec6({"-a56", "a46", "0", "0", "0", "0"}), basis_vec(5)};
    ex.eigen_minus = {basis_vec(1), vec6({"0", "-a56", "a46", "0", "0", "0"}),
                      vec6({"0", "0", "0", "0", "-a56^2", "a46^2"})};
    ex.metric = mat6(
        {"0", "a13*a46/a56", "a13", "a14", "0", "0",
         "a13*a46/a56", "2*a13", "(2*a13*a56 + a14*a46)/a46", "2*a14*a56/a46",
         "0", "0",
         "a13", "(2*a13*a56 + a14*a46)/a46",
         "(2*a13*a56^2 + 2*a14*a46*a56)/a46^2", "2*a14*a56^2/a46^2", "0", "0",
         "a14", "2*a14*a56/a46", "2*a14*a56^2/a46^2", "0", "0", "-a46",
         "0", "0", "0", "0", "0", "-a56",
         "0", "0", "0", "-a46", "-a56", "-2*a56^3/a46^2"});
    ex.scalar = sp("(8*a13*a56^7 - 8*a14*a46*a56^6 - a46^8)/(a14^2*a46^6*a56)");
    ex.zero_scalar_subs =
        subs_map({{"a13", "(a46^8 + 8*a56^6*a46*a14)/(8*a56^7)"}});
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

// Shared unnormalized operator of the widened g1 family, parametrized by
// the e45 coefficient; the two cases pin that coefficient to the values
// that make lambda equal -1 and +1.
const std::array<const char*, 36> kOpt2BaseK = {
    "-a46^2",     "-2*a46*a56", "-2*a56^2",   "0",          "0",     "0",
    "2*a45*a56",  "a46^2",      "2*a46*a56",  "2*a56^2",    "0",     "0",
    "0",          "0",          "-a46^2",     "-2*a46*a56", "0",     "0",
    "0",          "0",          "2*a45*a56",  "a46^2",      "0",     "0",
    "0",          "0",          "-2*a45*a46", "-2*a45*a56", "a46^2", "2*a56^2",
    "0",          "0",          "2*a45^2",    "0",          "-2*a45*a46", "-a46^2"};

Scenario make_g1_opt2_case(int which) {
    const bool first = which == 1;
    Scenario sc;
    sc.id = first ? "g1_opt2_case1" : "g1_opt2_case2";
    sc.algebra_id = "g1";
    const char* a45 = first ? "(a46^4 + 1)/(4*a46*a56^2)"
                            : "(a46^4 - 1)/(4*a46*a56^2)";
    sc.constraints =
        subs_map({{"a12", "a13*a46/a56"}, {"a23", "-a14"}, {"a45", a45}});
    add_zeros(sc.constraints,
              {"a15", "a16", "a24", "a25", "a26", "a34", "a35", "a36"});
    sc.nondegeneracy_assumptions = {sp("a14*a56"), sp("a46")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    const std::map<SymbolId, Scalar> pin{
        {SymbolTable::intern("a45"), sp(a45)}};
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("a45*e234 - a45*e135 - a46*e136 + a46*e245 "
                            "- a56*e146 - a56*e236 + a56*e345")
                     .substitute(pin);
    ex.lambda = first ? sp("-1") : sp("1");
    ex.eps = first ? -1 : 1;
    ex.structure_root = sp("1");
    ex.k_matrix = mat6(kOpt2BaseK).substitute(pin);
    ex.scalar = sp("(8*a13*a56^7 - 8*a14*a46*a56^6 - 1)/(a14^2*a56)");
    if (first)
        ex.zero_scalar_subs =
            subs_map({{"a13", "(1 + 8*a56^6*a46*a14)/(8*a56^7)"}});
    ex.signature =
        first ? std::pair<int, int>{2, 4} : std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_g2_main() {
    Scenario sc;
    sc.id = "g2_main";
    sc.algebra_id = "g2";
    add_zeros(sc.constraints, {"a13", "a16", "a24", "a25", "a26", "a34",
                               "a35", "a36", "a45", "a56"});
    sc.nondegeneracy_assumptions = {sp("a15*a23*a46")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("-a46*e136 + a46*e245");
    ex.lambda = sp("a46^4");
    ex.eps = 1;
    ex.structure_root = sp("a46^2");
    ex.k_matrix =
        diag6({"-a46^2", "a46^2", "-a46^2", "a46^2", "a46^2", "-a46^2"});
    ex.eigen_plus = {basis_vec(2), basis_vec(4), basis_vec(5)};
    ex.eigen_minus = {basis_vec(1), basis_vec(3), basis_vec(6)};
    ex.metric = mat6({"0",   "a12", "0",    "a14",  "a15", "0",
                      "a12", "0",   "-a23", "0",    "0",   "0",
                      "0",   "-a23", "0",   "0",    "0",   "0",
                      "a14", "0",   "0",    "0",    "0",   "-a46",
                      "a15", "0",   "0",    "0",    "0",   "0",
                      "0",   "0",   "0",    "-a46", "0",   "0"});
    ex.ricci_subs = subs_map({{"a14", "0"}});
    ex.ricci_operator = diag6(
        {"-a46/(2*a15*a23)", "-a46/(2*a15*a23)", "-a46/(2*a15*a23)",
         "a46/(2*a15*a23)", "-a46/(2*a15*a23)", "a46/(2*a15*a23)"});
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_g3_main() {
    Scenario sc;
    sc.id = "g3_main";
    sc.algebra_id = "g3";
    add_zeros(sc.constraints,
              {"a12", "a16", "a25", "a26", "a34", "a35", "a36", "a45", "a56"});
    sc.nondegeneracy_assumptions = {sp("a15*a23*a46")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("-a46*e126 - a46*e345");
    ex.lambda = sp("a46^4");
    ex.eps = 1;
    ex.structure_root = sp("a46^2");
    ex.k_matrix =
        diag6({"-a46^2", "-a46^2", "a46^2", "a46^2", "a46^2", "-a46^2"});
    ex.eigen_plus = {basis_vec(3), basis_vec(4), basis_vec(5)};
    ex.eigen_minus = {basis_vec(1), basis_vec(2), basis_vec(6)};
    ex.metric = mat6({"0",   "0",   "a13", "a14",  "a15", "0",
                      "0",   "0",   "a23", "a24",  "0",   "0",
                      "a13", "a23", "0",   "0",    "0",   "0",
                      "a14", "a24", "0",   "0",    "0",   "-a46",
                      "a15", "0",   "0",   "0",    "0",   "0",
                      "0",   "0",   "0",   "-a46", "0",   "0"});
    ex.ricci_subs = subs_map({{"a14", "0"}, {"a24", "0"}});
    ex.ricci_operator = diag6(
        {"-a46/(2*a15*a23)", "-a46/(2*a15*a23)", "-a46/(2*a15*a23)",
         "a46/(2*a15*a23)", "-a46/(2*a15*a23)", "a46/(2*a15*a23)"});
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_g4_general() {
    Scenario sc;
    sc.id = "g4_general";
    sc.algebra_id = "g4";
    sc.constraints = subs_map({{"a12", "a23*a56/a46"},
                               {"a14", "a15*a46/a56"},
                               {"a34", "-a15"},
                               {"a35", "-a15*a56/a46"}});
    add_zeros(sc.constraints, {"a16", "a26", "a36", "a45"});
    sc.nondegeneracy_assumptions = {sp("a46"), sp("a56"),
                                    sp("a13*(a24*a56 - a25*a46)")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("a56*e145 - a46*e345 - a46*e126 - a56*e236");
    ex.lambda = sp("a46^4 - 2*a46^2*a56^2 + a56^4");
    ex.eps = 1;
    ex.structure_root = sp("a46^2 - a56^2");
    ex.k_matrix = mat6({"-a46^2 - a56^2", "0", "2*a46*a56", "0", "0", "0",
                        "0", "-a46^2 + a56^2", "0", "0", "0", "0",
                        "-2*a46*a56", "0", "a46^2 + a56^2", "0", "0", "0",
                        "0", "0", "0", "a46^2 - a56^2", "0", "0",
                        "0", "0", "0", "0", "a46^2 - a56^2", "0",
                        "0", "0", "0", "0", "0", "-a46^2 + a56^2"});
    ex.eigen_plus = {vec6({"a56", "0", "a46", "0", "0", "0"}), basis_vec(4),
                     basis_vec(5)};
    ex.eigen_minus = {vec6({"a46", "0", "a56", "0", "0", "0"}), basis_vec(2),
                      basis_vec(6)};
    ex.ricci_nondiagonal = true;
    // The normalization root is sign-indefinite; each branch realizes one
    // sign of the expected scalar curvature.
    ex.scalar_branches = std::pair<Scalar, Scalar>{
        sp("(a46^2 - a56^2)/(a13*a24*a56 - a13*a25*a46)"),
        sp("(a56^2 - a46^2)/(a13*a24*a56 - a13*a25*a46)")};
    ex.branch_root = sp("a46^2 - a56^2");
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_g4_a56zero() {
    Scenario sc;
    sc.id = "g4_a56zero";
    sc.algebra_id = "g4";
    add_zeros(sc.constraints,
              {"a12", "a15", "a16", "a26", "a34", "a35", "a36", "a45", "a56"});
    sc.nondegeneracy_assumptions = {sp("a13*a25*a46")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("-a46*e126 - a46*e345");
    ex.lambda = sp("a46^4");
    ex.eps = 1;
    ex.structure_root = sp("a46^2");
    ex.k_matrix =
        diag6({"-a46^2", "-a46^2", "a46^2", "a46^2", "a46^2", "-a46^2"});
    ex.eigen_plus = {basis_vec(3), basis_vec(4), basis_vec(5)};
    ex.eigen_minus = {basis_vec(1), basis_vec(2), basis_vec(6)};
    ex.metric = mat6({"0",   "0",   "a13", "a14",  "0",   "0",
                      "0",   "0",   "a23", "a24",  "a25", "0",
                      "a13", "a23", "0",   "0",    "0",   "0",
                      "a14", "a24", "0",   "0",    "0",   "-a46",
                      "0",   "a25", "0",   "0",    "0",   "0",
                      "0",   "0",   "0",   "-a46", "0",   "0"});
    ex.ricci_subs = subs_map({{"a14", "0"}, {"a24", "0"}});
    ex.ricci_operator = diag6(
        {"-a46/(2*a25*a23)", "-a46/(2*a25*a23)", "-a46/(2*a25*a23)",
         "a46/(2*a25*a23)", "-a46/(2*a25*a23)", "a46/(2*a25*a23)"});
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_g5_main() {
    Scenario sc;
    sc.id = "g5_main";
    sc.algebra_id = "g5";
    add_zeros(sc.constraints,
              {"a12", "a16", "a26", "a34", "a35", "a36", "a45", "a46"});
    sc.nondegeneracy_assumptions = {sp("a56*(a13*a24 - a14*a23)")};
    sc.omega = generic_two_form().substitute(sc.constraints);
    ScenarioExpected& ex = sc.expected;
    ex.d_omega = parse_form("-a56*e126 + a56*e345");
    ex.lambda = sp("a56^4");
    ex.eps = 1;
    ex.structure_root = sp("a56^2");
    ex.k_matrix =
        diag6({"a56^2", "a56^2", "-a56^2", "-a56^2", "-a56^2", "a56^2"});
    ex.eigen_plus = {basis_vec(1), basis_vec(2), basis_vec(6)};
    ex.eigen_minus = {basis_vec(3), basis_vec(4), basis_vec(5)};
    ex.metric = mat6({"0",    "0",    "-a13", "-a14", "-a15", "0",
                      "0",    "0",    "-a23", "-a24", "-a25", "0",
                      "-a13", "-a23", "0",    "0",    "0",    "0",
                      "-a14", "-a24", "0",    "0",    "0",    "0",
                      "-a15", "-a25", "0",    "0",    "0",    "a56",
                      "0",    "0",    "0",    "0",    "a56",  "0"});
    ex.ricci_subs = subs_map({{"a15", "0"}, {"a25", "0"}});
    ex.ricci_operator =
        diag6({"-a56/(2*a13*a24 - 2*a14*a23)", "-a56/(2*a13*a24 - 2*a14*a23)",
               "-a56/(2*a13*a24 - 2*a14*a23)", "-a56/(2*a13*a24 - 2*a14*a23)",
               "a56/(2*a13*a24 - 2*a14*a23)", "a56/(2*a13*a24 - 2*a14*a23)"});
    ex.signature = std::pair<int, int>{3, 3};
    return sc;
}

Scenario make_closed(const std::string& algebra) {
    Scenario sc;
    sc.id = algebra + "_closed_degeneracy";
    sc.algebra_id = algebra;
    std::map<SymbolId, Scalar> fam;
    std::size_t frees = 0;
    if (algebra == "g1") {
        fam = subs_map({{"a34", "-a25"}, {"a24", "a15"}});
        add_zeros(fam, {"a16", "a26", "a35", "a36", "a45", "a46", "a56"});
        frees = 6;
    } else if (algebra == "g2") {
        fam = subs_map({{"a25", "-a34"}});
        add_zeros(fam, {"a16", "a24", "a26", "a35", "a36", "a45", "a46", "a56"});
        frees = 6;
    } else if (algebra == "g3") {
        fam = subs_map({{"a34", "a25"}});
        add_zeros(fam, {"a16", "a26", "a36", "a45", "a46", "a56"});
        frees = 8;
    } else if (algebra == "g4") {
        fam = subs_map({{"a34", "-a15"}});
        add_zeros(fam, {"a16", "a26", "a36", "a45", "a46", "a56"});
        frees = 8;
    } else {
        add_zeros(fam, {"a16", "a26", "a35", "a36", "a45", "a46", "a56"});
        frees = 8;
    }
    sc.constraints = fam;
    sc.omega = generic_two_form().substitute(fam);
    sc.expected.closed_family = fam;
    sc.expected.closed_free_count = frees;
    sc.expected.closed_cube_zero = true;
    return sc;
}

void push_item(std::vector<CheckItem>& out, const std::string& name, bool ok,
               std::string detail) {
    out.push_back(CheckItem{name, ok, std::move(detail)});
}

std::string fmt_vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].format();
    }
    return s + ")";
}

std::string mat_detail(const Mat& want, const Mat& got) {
    for (std::size_t i = 0; i < want.rows(); ++i)
        for (std::size_t j = 0; j < want.cols(); ++j)
            if (want.at(i, j) != got.at(i, j))
                return "entry (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "): expected " +
                       want.at(i, j).format() + ", computed " +
                       got.at(i, j).format();
    return "";
}

std::string sig_str(const std::pair<int, int>& s) {
    return "(" + std::to_string(s.first) + "," + std::to_string(s.second) +
           ")";
}

// Sign of x at the first deterministic sample point where it is nonzero.
int sign_at_samples(const Scalar& x, int budget) {
    const std::vector<SymbolId> syms = x.symbols();
    if (syms.empty()) {
        const int s = rat_sign(x.eval({}));
        if (s != 0) return s;
        throw DegeneratePoint(budget);
    }
    const std::size_t tries = static_cast<std::size_t>(budget) + 1;
    for (const auto& pt : sample_points(syms, tries)) {
        try {
            const int s = rat_sign(x.eval(pt));
            if (s != 0) return s;
        } catch (const PoleAtPoint&) {
        }
    }
    throw DegeneratePoint(budget);
}

Vec substitute_vec(const Vec& v, const std::map<SymbolId, Scalar>& subs) {
    Vec out;
    out.reserve(v.size());
    for (const Scalar& c : v) out.push_back(c.substitute(subs));
    return out;
}

// Rows span the coefficient space of a family linear in `frees`: one row
// per free symbol, columns over the canonical 2-form basis.
Mat family_rows(const Form& family, const std::vector<SymbolId>& frees) {
    const std::size_t cols = SymbolTable::canonical().size();
    Mat rows(frees.size(), cols);
    for (std::size_t r = 0; r < frees.size(); ++r) {
        std::map<SymbolId, Scalar> pick;
        for (SymbolId f : frees) pick[f] = Scalar(f == frees[r] ? 1 : 0);
        std::size_t k = 0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                rows.at(r, k++) = family.coeff({i, j}).substitute(pick);
    }
    return rows;
}

ScenarioReport run_closed(const Scenario& sc,
                          const std::map<SymbolId, Scalar>& extra) {
    const LieAlg L = catalog_algebra(sc.algebra_id);
    ScenarioReport rep;
    rep.id = sc.id;
    rep.algebra_id = sc.algebra_id;
    const ClosedFamily cf = closed_two_form_family(L);
    rep.omega = cf.form.substitute(extra);
    rep.d_omega = cediff(L, rep.omega);
    rep.certificate = is_nondegenerate2(rep.omega).second;
    rep.compatible = wedge(rep.omega, rep.d_omega).is_zero();
    std::vector<CheckItem>& out = rep.checks;

    push_item(out, "family_closed", rep.d_omega.is_zero(),
              rep.d_omega.is_zero() ? "d(omega) = 0"
                                    : format_form(rep.d_omega));

    std::vector<SymbolId> want_frees;
    for (SymbolId s : SymbolTable::canonical())
        if (!sc.expected.closed_family->count(s)) want_frees.push_back(s);
    const Form want_form =
        generic_two_form().substitute(*sc.expected.closed_family);
    const bool span_ok = same_row_space(family_rows(cf.form, cf.free_symbols),
                                        family_rows(want_form, want_frees));
    push_item(out, "closed_family_span", span_ok,
              span_ok ? "solution spaces agree" : "solution spaces differ");

    const bool count_ok =
        cf.free_symbols.size() == *sc.expected.closed_free_count;
    push_item(out, "closed_family_free_parameters", count_ok,
              std::to_string(cf.free_symbols.size()) + " free parameters");

    const bool cube_zero = rep.certificate.is_zero();
    push_item(out, "closed_cube_zero",
              cube_zero == sc.expected.closed_cube_zero,
              "omega^3 coefficient " + rep.certificate.format());
    return rep;
}

ScenarioReport run_computational(const Scenario& sc,
                                 const std::map<SymbolId, Scalar>& extra,
                                 int budget) {
    const LieAlg L = catalog_algebra(sc.algebra_id);
    const ScenarioExpected& ex = sc.expected;
    ScenarioReport rep;
    rep.id = sc.id;
    rep.algebra_id = sc.algebra_id;
    rep.omega = sc.omega.substitute(extra);
    rep.d_omega = cediff(L, rep.omega);
    rep.certificate = is_nondegenerate2(rep.omega).second;
    std::vector<CheckItem>& out = rep.checks;

    const Form wdw = wedge(rep.omega, rep.d_omega);
    rep.compatible = wdw.is_zero();
    push_item(out, "compatible", *rep.compatible,
              *rep.compatible ? "omega ^ d(omega) = 0" : format_form(wdw));

    push_item(out, "omega_nondegenerate", !rep.certificate.is_zero(),
              "omega^3 coefficient " + rep.certificate.format());

    bool assumptions_ok = true;
    std::string bad;
    for (const Scalar& a : sc.nondegeneracy_assumptions) {
        if (a.substitute(extra).is_zero()) {
            assumptions_ok = false;
            bad = a.format() + " vanishes";
            break;
        }
    }
    push_item(out, "assumptions_nonzero", assumptions_ok,
              assumptions_ok ? "all assumed quantities nonzero" : bad);

    if (ex.d_omega) {
        const Form want = ex.d_omega->substitute(extra);
        const bool ok = want == rep.d_omega;
        push_item(out, "d_omega", ok,
                  ok ? format_form(rep.d_omega)
                     : "expected " + format_form(want) + ", computed " +
                           format_form(rep.d_omega));
    }

    const EpsStructure s = eps_structure(rep.d_omega);
    rep.structure = s;

    if (ex.lambda) {
        const Scalar want = ex.lambda->substitute(extra);
        const bool ok = want == s.lambda;
        push_item(out, "lambda", ok,
                  ok ? s.lambda.format()
                     : "expected " + want.format() + ", computed " +
                           s.lambda.format());
    }
    if (ex.k_matrix) {
        const Mat want = ex.k_matrix->substitute(extra);
        const bool ok = want == s.K;
        push_item(out, "k_matrix", ok,
                  ok ? "matches" : mat_detail(want, s.K));
    }
    push_item(out, "k_squared_is_lambda_id",
              s.K * s.K == Mat::identity(6).scaled(s.lambda), "");
    push_item(out, "k_traceless", s.K.trace().is_zero(), "");
    if (ex.eps) {
        const bool ok = s.eps == *ex.eps;
        push_item(out, "epsilon", ok,
                  (s.eps > 0 ? std::string("+1") : std::string("-1")) +
                      (ok ? "" : " (expected " +
                                     std::string(*ex.eps > 0 ? "+1" : "-1") +
                                     ")"));
    }
    if (ex.k_matrix && ex.structure_root) {
        const Mat want = ex.k_matrix->substitute(extra).scaled(
            Scalar(1) / ex.structure_root->substitute(extra));
        const bool ok = want == s.J;
        push_item(out, "j_matrix", ok,
                  ok ? "K scaled by the stated root" : mat_detail(want, s.J));
    }
    push_item(out, "j_squared_is_eps_id",
              s.J * s.J == Mat::identity(6).scaled(Scalar(s.eps)), "");
    const Mat W = two_form_matrix(rep.omega);
    push_item(out, "omega_j_sign",
              s.J.transpose() * W * s.J == W.scaled(Scalar(-s.eps)),
              "omega(JX, JY) = -eps * omega(X, Y)");

    const PairReport pr = pair_report(L, rep.omega, rep.d_omega, true);
    rep.normalized = pr.normalized;
    rep.half_flat = pr.half_flat;
    rep.dual = pr.dual;
    push_item(out, "half_flat", pr.half_flat,
              "d(Omega) = 0 and omega ^ d(omega) = 0");
    push_item(out, "not_normalized", !pr.normalized,
              "dual(Omega) ^ Omega != 2 omega^3 / 3");

    const EpsStructure sd = eps_structure(pr.dual);
    {
        const bool ok = sd.lambda == s.lambda;
        push_item(out, "dual_lambda", ok,
                  ok ? sd.lambda.format()
                     : "expected " + s.lambda.format() + ", computed " +
                           sd.lambda.format());
    }
    push_item(out, "dual_structure_negates_j",
              sd.J == s.J.scaled(Scalar(-s.eps)), "J(dual) = -eps * J");
    push_item(out, "dual_involution", dual_form(pr.dual, sd) == -rep.d_omega,
              "dual(dual(Omega)) = -Omega");

    if (s.eps == 1) {
        const auto dist = eigen_distributions(s);
        rep.eigen_plus = dist.first;
        rep.eigen_minus = dist.second;
        push_item(out, "eigen_ranks",
                  dist.first.dim() == 3 && dist.second.dim() == 3,
                  "dim E+ = " + std::to_string(dist.first.dim()) +
                      ", dim E- = " + std::to_string(dist.second.dim()));
        if (ex.eigen_plus) {
            std::vector<Vec> gens;
            for (const Vec& v : *ex.eigen_plus)
                gens.push_back(substitute_vec(v, extra));
            const bool ok = Subspace::span(gens, 6) == dist.first;
            push_item(out, "eigen_plus_span", ok,
                      ok ? "span matches" : "span differs");
        }
        if (ex.eigen_minus) {
            std::vector<Vec> gens;
            for (const Vec& v : *ex.eigen_minus)
                gens.push_back(substitute_vec(v, extra));
            const bool ok = Subspace::span(gens, 6) == dist.second;
            push_item(out, "eigen_minus_span", ok,
                      ok ? "span matches" : "span differs");
        }
        const BracketWitness bp = bracket_closed(L, dist.first);
        push_item(out, "eigen_plus_not_bracket_closed", !bp.closed,
                  bp.closed ? "distribution closes under the bracket"
                            : "[" + fmt_vec(bp.x) + ", " + fmt_vec(bp.y) +
                                  "] = " + fmt_vec(bp.image) +
                                  " leaves the distribution");
        const BracketWitness bm = bracket_closed(L, dist.second);
        push_item(out, "eigen_minus_not_bracket_closed", !bm.closed,
                  bm.closed ? "distribution closes under the bracket"
                            : "[" + fmt_vec(bm.x) + ", " + fmt_vec(bm.y) +
                                  "] = " + fmt_vec(bm.image) +
                                  " leaves the distribution");
    }

    const NijenhuisTable nt = nijenhuis(L, s);
    rep.nijenhuis_zero = nt.empty();
    std::string nij;
    if (!nt.empty()) {
        const auto& entry = *nt.begin();
        nij = "N(e" + std::to_string(entry.first.first + 1) + ", e" +
              std::to_string(entry.first.second + 1) + ") = " +
              fmt_vec(entry.second);
    }
    push_item(out, "nijenhuis_nonzero", !nt.empty(),
              nt.empty() ? "tensor vanishes" : nij);

    const Metric m = associated_metric(rep.omega, s);
    rep.metric = m;
    push_item(out, "metric_symmetric", m.g == m.g.transpose(), "");
    if (ex.metric) {
        const Mat want = ex.metric->substitute(extra);
        const bool ok = want == m.g;
        push_item(out, "metric_matrix", ok,
                  ok ? "matches" : mat_detail(want, m.g));
    }

    const Tensor3 gamma = christoffel(L, m);
    const Tensor4 riem = riemann(L, gamma);
    const Mat ric = ricci(riem);
    rep.ricci_tensor = ric;
    const Mat rop = ricci_operator(m, ric);
    rep.ricci_op = rop;
    const Scalar R = scalar_curvature(m, ric);
    rep.scalar = R;
    rep.einstein = is_einstein(m, ric);

    push_item(out, "ricci_symmetric", ric == ric.transpose(), "");
    push_item(out, "not_einstein", !*rep.einstein,
              "Ricci tensor is not proportional to the metric");

    if (ex.scalar) {
        const Scalar want = ex.scalar->substitute(extra);
        const bool ok = want == R;
        push_item(out, "scalar_curvature", ok,
                  ok ? R.format()
                     : "expected " + want.format() + ", computed " +
                           R.format());
    }
    if (ex.scalar_branches && ex.branch_root) {
        const Scalar root = ex.branch_root->substitute(extra);
        const int sgn = sign_at_samples(root, budget);
        const Scalar want = (sgn > 0 ? ex.scalar_branches->first
                                     : ex.scalar_branches->second)
                                .substitute(extra);
        const bool ok = want == R;
        push_item(out, "scalar_curvature", ok,
                  ok ? R.format() + (sgn > 0 ? " [positive-root branch]"
                                             : " [negative-root branch]")
                     : "expected " + want.format() + ", computed " +
                           R.format());
    }
    if (ex.zero_scalar_subs) {
        const Scalar r0 = R.substitute(*ex.zero_scalar_subs);
        const Mat ric0 = ric.substitute(*ex.zero_scalar_subs);
        const bool ok = r0.is_zero() && !ric0.is_zero();
        push_item(out, "zero_scalar_substitution", ok,
                  ok ? "scalar curvature vanishes, Ricci tensor does not"
                     : "scalar = " + r0.format() +
                           (ric0.is_zero() ? ", Ricci tensor vanishes" : ""));
    }
    if (ex.ricci_subs && ex.ricci_operator) {
        const Mat got = rop.substitute(*ex.ricci_subs);
        const Mat want = ex.ricci_operator->substitute(extra);
        const bool ok = want == got;
        push_item(out, "ricci_operator_diagonal", ok,
                  ok ? "matches under the stated substitution"
                     : mat_detail(want, got));
    }
    if (ex.ricci_nondiagonal) {
        bool offdiag = false;
        for (std::size_t i = 0; i < 6 && !offdiag; ++i)
            for (std::size_t j = 0; j < 6 && !offdiag; ++j)
                if (i != j && !rop.at(i, j).is_zero()) offdiag = true;
        push_item(out, "ricci_operator_nondiagonal", offdiag,
                  offdiag ? "off-diagonal entries present"
                          : "operator is diagonal");
    }

    const std::size_t sig_count = ex.signature ? 3 : 1;
    const auto sigs = signature_samples(m, sig_count, budget);
    rep.signature = sigs.front();
    if (ex.signature) {
        bool ok = true;
        std::string seen;
        for (const auto& sg : sigs) {
            ok = ok && sg == *ex.signature;
            if (!seen.empty()) seen += " ";
            seen += sig_str(sg);
        }
        push_item(out, "signature", ok,
                  ok ? seen + " at " + std::to_string(sigs.size()) +
                           " sample points"
                     : "expected " + sig_str(*ex.signature) + ", computed " +
                           seen);
    }
    return rep;
}

}  // namespace

const std::vector<std::string>& catalog_algebra_ids() {
    static const std::vector<std::string> ids{"g1", "g2", "g3", "g4", "g5"};
    return ids;
}

LieAlg catalog_algebra(const std::string& id) { return build_algebra(id); }

std::vector<std::string> list_scenarios() {
    return {"g1_opt1",      "g1_opt2_case1", "g1_opt2_case2",
            "g2_main",      "g3_main",       "g4_general",
            "g4_a56zero",   "g5_main",       "g1_closed_degeneracy",
            "g2_closed_degeneracy",          "g3_closed_degeneracy",
            "g4_closed_degeneracy",          "g5_closed_degeneracy"};
}

Scenario scenario(const std::string& id) {
    if (id == "g1_opt1") return make_g1_opt1();
    if (id == "g1_opt2_case1") return make_g1_opt2_case(1);
    if (id == "g1_opt2_case2") return make_g1_opt2_case(2);
    if (id == "g2_main") return make_g2_main();
    if (id == "g3_main") return make_g3_main();
    if (id == "g4_general") return make_g4_general();
    if (id == "g4_a56zero") return make_g4_a56zero();
    if (id == "g5_main") return make_g5_main();
    if (id == "g1_closed_degeneracy") return make_closed("g1");
    if (id == "g2_closed_degeneracy") return make_closed("g2");
    if (id == "g3_closed_degeneracy") return make_closed("g3");
    if (id == "g4_closed_degeneracy") return make_closed("g4");
    if (id == "g5_closed_degeneracy") return make_closed("g5");
    throw UnknownScenario(id);
}

bool ScenarioReport::all_matched() const {
    for (const CheckItem& c : checks)
        if (!c.matched) return false;
    return true;
}

const CheckItem* ScenarioReport::first_mismatch() const {
    for (const CheckItem& c : checks)
        if (!c.matched) return &c;
    return nullptr;
}

ScenarioReport run_scenario(const std::string& id,
                            const std::map<SymbolId, Scalar>& extra_subs,
                            int retry_budget) {
    const Scenario sc = scenario(id);
    if (sc.expected.closed_family) return run_closed(sc, extra_subs);
    return run_computational(sc, extra_subs, retry_budget);
}

bool g2_incompatibility_check() {
    const LieAlg L = catalog_algebra("g2");
    const ClosedFamily cf = closed_two_form_family(L);
    const Form family = cf.form +
                        Form::basis(6, {3, 6}).scaled(Scalar::coeff(3, 6)) +
                        Form::basis(6, {5, 6}).scaled(Scalar::coeff(5, 6));
    const std::vector<Scalar> conds = wedge_closure_conditions(L, family);
    const std::vector<SymbolId>& unknowns = cf.free_symbols;
    const std::size_t n = unknowns.size();

    std::map<SymbolId, Scalar> zero_all;
    for (SymbolId u : unknowns) zero_all[u] = Scalar(0);

    // The conditions are affine-linear in the closed-family coefficients
    // because d(omega) does not involve them.
    Mat coeffs(conds.size(), n);
    std::vector<Scalar> rhs(conds.size());
    for (std::size_t i = 0; i < conds.size(); ++i) {
        const Scalar c0 = conds[i].substitute(zero_all);
        rhs[i] = -c0;
        for (std::size_t j = 0; j < n; ++j) {
            std::map<SymbolId, Scalar> pick = zero_all;
            pick[unknowns[j]] = Scalar(1);
            coeffs.at(i, j) = conds[i].substitute(pick) - c0;
        }
    }

    Mat aug(conds.size(), n + 1);
    for (std::size_t i = 0; i < conds.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = coeffs.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    const Mat red = aug.rref();
    std::vector<Scalar> particular(n, Scalar(0));
    for (std::size_t i = 0; i < red.rows(); ++i) {
        std::size_t pivot = n + 1;
        for (std::size_t j = 0; j <= n; ++j)
            if (!red.at(i, j).is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == n) return true;  // inconsistent: no compatible form
        if (pivot < n) particular[pivot] = red.at(i, n);
    }

    const auto kernel = coeffs.nullspace();
    std::vector<Scalar> params;
    for (std::size_t k = 0; k < kernel.size(); ++k)
        params.push_back(
            Scalar::symbol(SymbolTable::intern("t" + std::to_string(k + 1))));

    std::map<SymbolId, Scalar> sol;
    for (std::size_t j = 0; j < n; ++j) {
        Scalar v = particular[j];
        for (std::size_t k = 0; k < kernel.size(); ++k)
            v += params[k] * kernel[k][j];
        sol[unknowns[j]] = v;
    }
    const Form solved = family.substitute(sol);
    return is_nondegenerate2(solved).second.is_zero();
}

}  // namespace stableforms
