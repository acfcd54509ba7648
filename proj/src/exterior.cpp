#include "stableforms/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "stableforms/errors.hpp"

namespace stableforms {

Form::Form(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

Form Form::basis(std::size_t dim, const std::vector<int>& indices) {
    Form f(dim, indices.size());
    MultiIndex idx;
    for (int i : indices) {
        if (i < 1 || static_cast<std::size_t>(i) > dim)
            throw IndexOutOfRange("basis form index");
        idx.push_back(static_cast<std::size_t>(i - 1));
    }
    f.add_term(idx, Scalar(1));
    return f;
}

Scalar Form::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void Form::add_term(const MultiIndex& idx, const Scalar& c) {
    if (idx.size() != degree_)
        throw DegreeMismatch("term degree does not match form degree");
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] >= dim_) throw IndexOutOfRange("form index");
        if (t > 0 && idx[t - 1] >= idx[t])
            throw Error("multi-index must be strictly increasing");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Form Form::operator-() const {
    Form r(dim_, degree_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
}

Form Form::operator+(const Form& rhs) const {
    if (dim_ != rhs.dim_) throw DimensionMismatch("form addition dim");
    if (degree_ != rhs.degree_) throw DegreeMismatch("form addition degree");
    Form r = *this;
    for (const auto& [idx, c] : rhs.coeffs_) r.add_term(idx, c);
    return r;
}

Form Form::operator-(const Form& rhs) const {
    return *this + (-rhs);
}

Form Form::scaled(const Scalar& c) const {
    Form r(dim_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : coeffs_) r.coeffs_.emplace(idx, v * c);
    return r;
}

bool Form::operator==(const Form& rhs) const {
    return dim_ == rhs.dim_ && degree_ == rhs.degree_ && coeffs_ == rhs.coeffs_;
}

Form Form::substitute(const std::map<SymbolId, Scalar>& subs) const {
    Form r(dim_, degree_);
    for (const auto& [idx, c] : coeffs_) r.add_term(idx, c.substitute(subs));
    return r;
}

namespace {

// Merges two strictly increasing index lists; false on a shared index,
// otherwise writes the merge and the parity sign of the interleave.
bool merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out,
                   int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge dim");
    Form r(a.dim(), a.degree() + b.degree());
    MultiIndex merged;
    int sign = 0;
    for (const auto& [ia, ca] : a.coeffs())
        for (const auto& [ib, cb] : b.coeffs()) {
            if (!merge_indices(ia, ib, merged, sign)) continue;
            r.add_term(merged, sign > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

Form interior(const Vec& x, const Form& a) {
    if (x.size() != a.dim()) throw DimensionMismatch("interior product dim");
    if (a.degree() == 0) return Form(a.dim(), 0);
    Form r(a.dim(), a.degree() - 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const Scalar& xt = x[idx[t]];
            if (xt.is_zero()) continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t u = 0; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            Scalar term = c * xt;
            r.add_term(rest, (t % 2 == 0) ? term : -term);
        }
    }
    return r;
}

namespace {

// de^k as a 2-form.
Form basis_diff(const LieAlg& L, std::size_t k) {
    Form d(L.dim(), 2);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const Scalar& c = L.c(i, j, k);
            if (!c.is_zero()) d.add_term({i, j}, -c);
        }
    return d;
}

}  // namespace

Form cediff(const LieAlg& L, const Form& a) {
    if (a.dim() != L.dim()) throw DimensionMismatch("differential dim");
    Form r(a.dim(), a.degree() + 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            Form rest(a.dim(), idx.size() - 1);
            MultiIndex others;
            for (std::size_t u = 0; u < idx.size(); ++u)
                if (u != t) others.push_back(idx[u]);
            rest.add_term(others, (t % 2 == 0) ? c : -c);
            r = r + wedge(basis_diff(L, idx[t]), rest);
        }
    }
    return r;
}

bool is_closed(const LieAlg& L, const Form& a) {
    return cediff(L, a).is_zero();
}

Form generic_two_form(std::size_t dim) {
    Form w(dim, 2);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            w.add_term({i, j}, Scalar::coeff(static_cast<int>(i) + 1,
                                             static_cast<int>(j) + 1));
    return w;
}

Form two_form_cube(const Form& w) {
    return wedge(w, wedge(w, w));
}

std::pair<bool, Scalar> is_nondegenerate2(const Form& w) {
    if (w.degree() != 2 || w.dim() != 6)
        throw DegreeMismatch("nondegeneracy test needs a 2-form in dim 6");
    Scalar cert = two_form_cube(w).coeff({0, 1, 2, 3, 4, 5});
    return {!cert.is_zero(), cert};
}

std::vector<Scalar> wedge_closure_conditions(const LieAlg& L, const Form& w) {
    Form five = wedge(w, cediff(L, w));
    std::vector<Scalar> out;
    for (const auto& [idx, c] : five.coeffs()) out.push_back(c);
    return out;
}

ClosedFamily closed_two_form_family(const LieAlg& L, std::size_t dim) {
    // dw is linear in the a_ij, so closedness is a rational linear system
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<SymbolId> symbols;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            pairs.emplace_back(i, j);
            symbols.push_back(SymbolTable::coeff(static_cast<int>(i) + 1,
                                                 static_cast<int>(j) + 1));
        }
    const std::size_t n = pairs.size();

    std::map<MultiIndex, std::size_t> row_of;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t p = 0; p < n; ++p) {
        Form d = cediff(L, Form::basis(
                               dim, {static_cast<int>(pairs[p].first) + 1,
                                     static_cast<int>(pairs[p].second) + 1}));
        for (const auto& [idx, c] : d.coeffs()) {
            auto [it, inserted] = row_of.emplace(idx, rows.size());
            if (inserted) rows.emplace_back(n, Scalar(0));
            rows[it->second][p] = c;
        }
    }

    // eliminate with reversed column order so each constraint is solved
    // for its largest symbol
    Mat m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][n - 1 - c];
    std::size_t rank = 0;
    Mat e = m.rref(&rank);

    ClosedFamily fam;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t col = 0;
        while (col < n && e.at(r, col).is_zero()) ++col;
        is_pivot[col] = true;
        Scalar rhs(0);
        for (std::size_t c = col + 1; c < n; ++c) {
            if (e.at(r, c).is_zero()) continue;
            rhs -= e.at(r, c) * Scalar::symbol(symbols[n - 1 - c]);
        }
        fam.substitution.emplace(symbols[n - 1 - col], rhs);
    }
    for (std::size_t c = n; c-- > 0;)
        if (!is_pivot[c]) fam.free_symbols.push_back(symbols[n - 1 - c]);

    fam.form = generic_two_form(dim).substitute(fam.substitution);
    return fam;
}

// ---------------------------------------------------------------------------
// form literals

namespace {

struct TermSlice {
    std::size_t begin, end;
    int sign;
};

std::vector<TermSlice> split_terms(const std::string& s) {
    std::vector<TermSlice> out;
    int depth = 0;
    std::size_t start = 0;
    int sign = 1;
    bool any = false;
    std::size_t p = 0;
    auto flush = [&](std::size_t end) {
        out.push_back({start, end, sign});
        any = true;
    };
    // leading sign belongs to the first term
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        sign = (s[p] == '-') ? -1 : 1;
        ++p;
    }
    start = p;
    for (; p < s.size(); ++p) {
        char c = s[p];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            flush(p);
            sign = (c == '-') ? -1 : 1;
            start = p + 1;
        }
    }
    if (depth != 0) throw SyntaxError("unbalanced parentheses", s.size());
    flush(s.size());
    if (!any) throw SyntaxError("empty form literal", 0);
    return out;
}

}  // namespace

Form parse_form(const std::string& text, std::size_t dim) {
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos)
        throw SyntaxError("empty form literal", 0);
    if (text.compare(first, 1, "0") == 0 &&
        text.find_first_not_of(" \t\n", first + 1) == std::string::npos) {
        return Form(dim, 0);
    }

    std::optional<std::size_t> degree;
    Form result(dim, 0);
    for (const TermSlice& slice : split_terms(text)) {
        std::string term = text.substr(slice.begin, slice.end - slice.begin);
        // the basis factor is the last '*'-separated factor
        int depth = 0;
        std::size_t split = std::string::npos;
        for (std::size_t p = 0; p < term.size(); ++p) {
            if (term[p] == '(') ++depth;
            if (term[p] == ')') --depth;
            if (depth == 0 && term[p] == '*') split = p;
        }
        std::string coeff_text =
            split == std::string::npos ? "" : term.substr(0, split);
        std::string base =
            split == std::string::npos ? term : term.substr(split + 1);
        std::size_t b0 = base.find_first_not_of(" \t\n");
        std::size_t b1 = base.find_last_not_of(" \t\n");
        if (b0 == std::string::npos)
            throw SyntaxError("missing basis factor", slice.end);
        base = base.substr(b0, b1 - b0 + 1);
        if (base.size() < 2 || base[0] != 'e' ||
            base.find_first_not_of("123456789", 1) != std::string::npos)
            throw SyntaxError("expected basis factor e<indices>",
                              slice.begin + (split == std::string::npos ? b0 : split + 1 + b0));
        MultiIndex idx;
        for (std::size_t p = 1; p < base.size(); ++p) {
            std::size_t v = static_cast<std::size_t>(base[p] - '1');
            if (v >= dim)
                throw SyntaxError("basis index exceeds dimension", slice.begin);
            if (!idx.empty() && idx.back() >= v)
                throw SyntaxError("basis indices must be strictly increasing",
                                  slice.begin);
            idx.push_back(v);
        }
        Scalar c(1);
        if (!coeff_text.empty()) c = scalar_parse(coeff_text);
        if (slice.sign < 0) c = -c;

        if (!degree) {
            degree = idx.size();
            result = Form(dim, idx.size());
        } else if (*degree != idx.size()) {
            throw SyntaxError("mixed degrees in form literal", slice.begin);
        }
        result.add_term(idx, c);
    }
    return result;
}

std::string format_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : f.coeffs()) {
        std::string base = "e";
        for (std::size_t v : idx) base += static_cast<char>('1' + v);

        std::string cs = c.format();
        bool negated = false;
        std::string body;
        if (cs == "1") {
            body = base;
        } else if (cs == "-1") {
            negated = true;
            body = base;
        } else {
            // parenthesize coefficients with top-level + or -
            bool needs_parens = false;
            int depth = 0;
            for (std::size_t p = 0; p < cs.size(); ++p) {
                if (cs[p] == '(') ++depth;
                if (cs[p] == ')') --depth;
                if (depth == 0 && p > 0 && (cs[p] == '+' || cs[p] == '-'))
                    needs_parens = true;
            }
            if (!needs_parens && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            if (needs_parens) cs = "(" + cs + ")";
            body = cs + "*" + base;
        }
        if (first) {
            out = negated ? "-" + body : body;
            first = false;
        } else {
            out += negated ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace stableforms
