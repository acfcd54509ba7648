#include <cctype>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stableforms/catalog.hpp"
#include "stableforms/curvature.hpp"
#include "stableforms/errors.hpp"
#include "stableforms/exterior.hpp"
#include "stableforms/lie_algebra.hpp"
#include "stableforms/scalar.hpp"
#include "stableforms/stable_forms.hpp"
#include "stableforms/symbols.hpp"

using nlohmann::json;
using namespace stableforms;

namespace {

int retry_budget_from_env() {
    const char* raw = std::getenv("STABLEFORMS_RETRY_BUDGET");
    if (raw == nullptr) return 16;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) return 16;
    return static_cast<int>(value);
}

std::string basis_name(std::size_t k) { return "e" + std::to_string(k + 1); }

// A top-level '+' or binary '-' makes the factor ambiguous next to '*'.
bool needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || (c == '-' && i > 0))) return true;
    }
    return false;
}

std::string format_vec(const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::string c = scalar_format(v[k]);
        std::string term;
        if (c == "1")
            term = basis_name(k);
        else if (c == "-1")
            term = "-" + basis_name(k);
        else
            term = (needs_parens(c) ? "(" + c + ")" : c) + "*" + basis_name(k);
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

// Matrices serialize as row-major flat arrays of scalar strings.
json json_matrix(const Mat& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(scalar_format(m.at(i, j)));
    return out;
}

json json_basis(const Subspace& s) {
    json out = json::array();
    const Mat& b = s.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.cols(); ++j)
            row.push_back(scalar_format(b.at(i, j)));
        out.push_back(row);
    }
    return out;
}

json algebra_json(const LieAlg& L) {
    json brackets = json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Vec v = L.bracket_basis(i, j);
            bool zero = true;
            for (const Scalar& c : v)
                if (!c.is_zero()) zero = false;
            if (zero) continue;
            brackets.push_back("[" + basis_name(i) + "," + basis_name(j) +
                               "] = " + format_vec(v));
        }
    }
    json dims = json::array();
    for (std::size_t d : series_dims(lower_central_series(L))) dims.push_back(d);
    json out;
    out["brackets"] = brackets;
    out["series_dims"] = dims;
    std::optional<int> step = nilpotency_step(L);
    if (step)
        out["step"] = *step;
    else
        out["step"] = nullptr;
    return out;
}

void check_identifier(const std::string& name) {
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
        throw SyntaxError("substitution name must be an identifier", 0);
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_')
            throw SyntaxError("substitution name must be an identifier", 0);
}

std::map<SymbolId, Scalar> parse_subs(const std::vector<std::string>& raw) {
    std::map<SymbolId, Scalar> out;
    for (const std::string& item : raw) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("substitution must be name=value", 0);
        std::string name = item.substr(0, eq);
        check_identifier(name);
        out[SymbolTable::intern(name)] = scalar_parse(item.substr(eq + 1));
    }
    return out;
}

std::map<SymbolId, Rational> parse_point(const std::vector<std::string>& raw) {
    std::map<SymbolId, Rational> out;
    for (const std::string& item : raw) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("sample point pin must be name=value", 0);
        std::string name = item.substr(0, eq);
        check_identifier(name);
        Scalar value = scalar_parse(item.substr(eq + 1));
        if (!value.symbols().empty())
            throw SyntaxError("sample point value must be numeric", eq + 1);
        out[SymbolTable::intern(name)] = value.eval({});
    }
    return out;
}

void print_text_matrix(std::ostream& os, const json& flat, std::size_t cols) {
    for (std::size_t i = 0; i < flat.size(); i += cols) {
        os << "  [";
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) os << ", ";
            os << flat[i + j].get<std::string>();
        }
        os << "]\n";
    }
}

void render_text(std::ostream& os, const json& rep) {
    if (rep.contains("id"))
        os << "scenario: " << rep["id"].get<std::string>() << "\n";
    if (rep.contains("algebra")) {
        const json& a = rep["algebra"];
        os << "algebra:\n  brackets:\n";
        for (const json& b : a["brackets"])
            os << "    " << b.get<std::string>() << "\n";
        os << "  series_dims: [";
        for (std::size_t i = 0; i < a["series_dims"].size(); ++i) {
            if (i) os << ", ";
            os << a["series_dims"][i];
        }
        os << "]\n  step: " << a["step"] << "\n";
    }
    auto put_str = [&](const char* key) {
        if (rep.contains(key))
            os << key << ": " << rep[key].get<std::string>() << "\n";
    };
    auto put_bool = [&](const char* key) {
        if (rep.contains(key))
            os << key << ": " << (rep[key].get<bool>() ? "true" : "false")
               << "\n";
    };
    auto put_mat = [&](const char* key) {
        if (rep.contains(key)) {
            os << key << ":\n";
            print_text_matrix(os, rep[key], 6);
        }
    };
    put_str("omega");
    put_bool("nondegenerate");
    put_str("d_omega");
    put_str("lambda");
    put_bool("structure_rational");
    if (rep.contains("epsilon"))
        os << "epsilon: " << rep["epsilon"].get<int>() << "\n";
    put_mat("K");
    put_mat("J_or_P");
    if (rep.contains("eigenbases")) {
        os << "eigenbases:\n";
        for (const char* side : {"plus", "minus"}) {
            os << "  " << side << ":\n";
            for (const json& row : rep["eigenbases"][side]) {
                os << "    (";
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) os << ", ";
                    os << row[j].get<std::string>();
                }
                os << ")\n";
            }
        }
    }
    if (rep.contains("pair")) {
        const json& p = rep["pair"];
        os << "pair:\n";
        for (const char* key : {"compatible", "normalized", "half_flat"})
            if (p.contains(key))
                os << "  " << key << ": "
                   << (p[key].get<bool>() ? "true" : "false") << "\n";
    }
    put_bool("nijenhuis_zero");
    put_mat("metric");
    put_mat("ricci");
    put_mat("ricci_operator");
    put_str("scalar_curvature");
    if (rep.contains("signature"))
        os << "signature: (" << rep["signature"][0] << ", "
           << rep["signature"][1] << ")\n";
    if (rep.contains("comparisons")) {
        os << "comparisons:\n";
        for (const json& c : rep["comparisons"]) {
            os << "  " << (c["matched"].get<bool>() ? "ok      " : "MISMATCH")
               << "  " << c["name"].get<std::string>();
            std::string detail = c["detail"].get<std::string>();
            if (!detail.empty()) os << "  [" << detail << "]";
            os << "\n";
        }
    }
}

void emit(const json& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        render_text(std::cout, rep);
}

LieAlg resolve_algebra(const std::string& id) {
    if (id == "abelian6") return LieAlg(6);
    for (const std::string& known : catalog_algebra_ids())
        if (known == id) return catalog_algebra(id);
    if (!id.empty() && id.front() == '(') return parse_tuple(id);
    throw UnknownAlgebra(id);
}

int cmd_parse(const std::string& text, const std::string& format) {
    LieAlg L = parse_tuple(text);
    json rep;
    rep["schema"] = "stableforms/1";
    rep["algebra"] = algebra_json(L);
    emit(rep, format);
    return 0;
}

struct AnalyzeArgs {
    std::string algebra;
    std::string omega;
    std::vector<std::string> subs;
    std::vector<std::string> point;
    std::string format = "text";
};

int cmd_analyze(const AnalyzeArgs& args) {
    int budget = retry_budget_from_env();
    LieAlg L = resolve_algebra(args.algebra);
    if (L.dim() != 6) {
        std::cerr << "analyze: the pipeline needs a six-dimensional algebra, "
                     "got dimension "
                  << L.dim() << "\n";
        return 2;
    }
    std::map<SymbolId, Scalar> subs = parse_subs(args.subs);
    std::map<SymbolId, Rational> pins = parse_point(args.point);
    Form w = parse_form(args.omega, 6);
    if (w.degree() != 2) {
        std::cerr << "analyze: omega must be a 2-form, got degree "
                  << w.degree() << "\n";
        return 2;
    }
    if (!subs.empty()) w = w.substitute(subs);

    json rep;
    rep["schema"] = "stableforms/1";
    rep["algebra"] = algebra_json(L);
    rep["omega"] = format_form(w);

    std::string stage = "differential";
    try {
        Form dw = cediff(L, w);
        rep["d_omega"] = format_form(dw);
        std::pair<bool, Scalar> nd = is_nondegenerate2(w);
        rep["nondegenerate"] = nd.first;

        stage = "structure";
        std::optional<EpsStructure> s;
        try {
            s = eps_structure(dw);
        } catch (const NonSquareLambda&) {
            // Stable, but sqrt|lambda| leaves the field: report the
            // scale-covariant data and skip every J-dependent section.
        }
        rep["structure_rational"] = s.has_value();
        if (!s) {
            rep["K"] = json_matrix(hitchin_K(dw));
            rep["lambda"] = scalar_format(hitchin_lambda(dw));
            PairReport pr = pair_report(L, w, dw, false);
            rep["pair"] =
                json{{"compatible", pr.compatible}, {"half_flat", pr.half_flat}};
            emit(rep, args.format);
            return 0;
        }
        rep["lambda"] = scalar_format(s->lambda);
        rep["epsilon"] = s->eps;
        rep["K"] = json_matrix(s->K);
        rep["J_or_P"] = json_matrix(s->J);

        if (s->eps == 1) {
            stage = "eigenbases";
            std::pair<Subspace, Subspace> eig = eigen_distributions(*s);
            rep["eigenbases"] = json{{"minus", json_basis(eig.second)},
                                     {"plus", json_basis(eig.first)}};
        }

        stage = "pair";
        PairReport pr = pair_report(L, w, dw, true);
        rep["pair"] = json{{"compatible", pr.compatible},
                           {"half_flat", pr.half_flat},
                           {"normalized", pr.normalized}};

        stage = "nijenhuis";
        rep["nijenhuis_zero"] = is_integrable(nijenhuis(L, *s));

        if (nd.first) {
            stage = "metric";
            Metric m = associated_metric(w, *s);
            rep["metric"] = json_matrix(m.g);

            stage = "curvature";
            CurvatureReport cr = curvature_report(L, m, budget);
            rep["ricci"] = json_matrix(cr.ric);
            rep["ricci_operator"] = json_matrix(cr.ricci_op);
            rep["scalar_curvature"] = scalar_format(cr.scalar);

            stage = "signature";
            std::pair<int, int> sig = cr.signature;
            if (!pins.empty()) {
                std::map<SymbolId, Rational> point =
                    base_point(matrix_symbols(m.g));
                for (const auto& [sym, val] : pins) point[sym] = val;
                sig = signature_at(m, point, budget);
            }
            rep["signature"] = json::array({sig.first, sig.second});
        }
    } catch (const Error& e) {
        std::cerr << "analyze: " << stage << ": " << e.what() << "\n";
        return 3;
    }
    emit(rep, args.format);
    return 0;
}

json scenario_json(const ScenarioReport& r) {
    json rep;
    rep["schema"] = "stableforms/1";
    rep["id"] = r.id;
    rep["algebra_id"] = r.algebra_id;
    rep["algebra"] = algebra_json(catalog_algebra(r.algebra_id));
    rep["omega"] = format_form(r.omega);
    rep["d_omega"] = format_form(r.d_omega);
    if (r.structure) {
        rep["lambda"] = scalar_format(r.structure->lambda);
        rep["epsilon"] = r.structure->eps;
        rep["K"] = json_matrix(r.structure->K);
        rep["J_or_P"] = json_matrix(r.structure->J);
    }
    if (r.eigen_plus && r.eigen_minus)
        rep["eigenbases"] = json{{"minus", json_basis(*r.eigen_minus)},
                                 {"plus", json_basis(*r.eigen_plus)}};
    if (r.compatible.has_value() || r.normalized.has_value() ||
        r.half_flat.has_value()) {
        json p;
        if (r.compatible.has_value()) p["compatible"] = *r.compatible;
        if (r.normalized.has_value()) p["normalized"] = *r.normalized;
        if (r.half_flat.has_value()) p["half_flat"] = *r.half_flat;
        rep["pair"] = p;
    }
    if (r.nijenhuis_zero.has_value()) rep["nijenhuis_zero"] = *r.nijenhuis_zero;
    if (r.metric) rep["metric"] = json_matrix(r.metric->g);
    if (r.ricci_tensor) rep["ricci"] = json_matrix(*r.ricci_tensor);
    if (r.ricci_op) rep["ricci_operator"] = json_matrix(*r.ricci_op);
    if (r.scalar) rep["scalar_curvature"] = scalar_format(*r.scalar);
    if (r.signature)
        rep["signature"] = json::array({r.signature->first, r.signature->second});
    json comps = json::array();
    for (const CheckItem& c : r.checks)
        comps.push_back(
            json{{"detail", c.detail}, {"matched", c.matched}, {"name", c.name}});
    rep["comparisons"] = comps;
    return rep;
}

int cmd_scenario_list(const std::string& format) {
    std::vector<std::string> ids = list_scenarios();
    if (format == "json") {
        json rep;
        rep["schema"] = "stableforms/1";
        rep["scenarios"] = ids;
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const std::string& id : ids) std::cout << id << "\n";
    }
    return 0;
}

int cmd_scenario_run(const std::string& id,
                     const std::vector<std::string>& subs_raw,
                     const std::string& format) {
    std::map<SymbolId, Scalar> subs = parse_subs(subs_raw);
    ScenarioReport r = run_scenario(id, subs, retry_budget_from_env());
    emit(scenario_json(r), format);
    if (!r.all_matched()) {
        const CheckItem* m = r.first_mismatch();
        std::cerr << "scenario " << r.id << ": first mismatch: " << m->name;
        if (!m->detail.empty()) std::cerr << ": " << m->detail;
        std::cerr << "\n";
        return 4;
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "exact pipeline from left-invariant 2-forms on six-dimensional "
        "nilpotent Lie algebras to curvature"};
    app.require_subcommand(1);

    std::string parse_text;
    std::string parse_format = "text";
    CLI::App* parse_cmd =
        app.add_subcommand("parse", "parse a bracket tuple and echo the algebra");
    parse_cmd
        ->add_option("tuple", parse_text,
                     "tuple literal, e.g. \"(0,0,12,13,14+23,34-25)\"")
        ->required();
    parse_cmd->add_option("--format", parse_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    AnalyzeArgs an;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "run the full pipeline on one 2-form");
    analyze_cmd
        ->add_option("--algebra", an.algebra,
                     "g1..g5, abelian6, or a tuple literal")
        ->required();
    analyze_cmd->add_option("--omega", an.omega, "2-form literal")->required();
    analyze_cmd->add_option("--subs", an.subs,
                            "substitution name=value, repeatable");
    analyze_cmd->add_option("--sample-point", an.point,
                            "signature pin name=value, repeatable");
    analyze_cmd->add_option("--format", an.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* scen_cmd =
        app.add_subcommand("scenario", "catalogued expected-versus-computed runs");
    scen_cmd->require_subcommand(1);
    std::string list_format = "text";
    CLI::App* list_cmd = scen_cmd->add_subcommand("list", "list scenario ids");
    list_cmd->add_option("--format", list_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    std::string run_id;
    std::vector<std::string> run_subs;
    std::string run_format = "text";
    CLI::App* run_cmd = scen_cmd->add_subcommand("run", "run one scenario");
    run_cmd->add_option("id", run_id, "scenario id")->required();
    run_cmd->add_option("--subs", run_subs, "substitution name=value, repeatable");
    run_cmd->add_option("--format", run_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (parse_cmd->parsed()) return cmd_parse(parse_text, parse_format);
    if (analyze_cmd->parsed()) return cmd_analyze(an);
    if (list_cmd->parsed()) return cmd_scenario_list(list_format);
    return cmd_scenario_run(run_id, run_subs, run_format);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotNilpotentOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\nknown ids:";
        for (const std::string& id : stableforms::list_scenarios())
            std::cerr << " " << id;
        std::cerr << "\n";
        return 2;
    } catch (const UnknownAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
