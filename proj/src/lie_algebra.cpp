#include "stableforms/lie_algebra.hpp"

#include <cctype>

#include "stableforms/errors.hpp"

namespace stableforms {

LieAlg::LieAlg(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

const Scalar& LieAlg::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw IndexOutOfRange("structure constant index");
    return c_[(i * dim_ + j) * dim_ + k];
}

void LieAlg::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (i >= dim_ || j >= dim_)
        throw IndexOutOfRange("bracket index");
    if (value.size() != dim_)
        throw DimensionMismatch("bracket value length");
    for (std::size_t k = 0; k < dim_; ++k) {
        c_[(i * dim_ + j) * dim_ + k] = value[k];
        c_[(j * dim_ + i) * dim_ + k] = -value[k];
    }
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatch("bracket argument length");
    Vec out(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& ck = c(i, j, k);
                if (!ck.is_zero()) out[k] += f * ck;
            }
        }
    }
    return out;
}

Vec LieAlg::bracket_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

bool LieAlg::operator==(const LieAlg& rhs) const {
    return dim_ == rhs.dim_ && c_ == rhs.c_;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Mat m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw DimensionMismatch("span vector length");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    std::size_t r = 0;
    Mat e = m.rref(&r);
    Subspace s;
    s.basis_ = Mat(r, ambient);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient; ++j)
            s.basis_.at(i, j) = e.at(i, j);
    return s;
}

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.basis_ = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.basis_ = Mat::identity(ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient()) throw DimensionMismatch("membership length");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Vec r(ambient());
        for (std::size_t j = 0; j < ambient(); ++j) r[j] = basis_.at(i, j);
        rows.push_back(std::move(r));
    }
    rows.push_back(v);
    return Subspace::span(rows, ambient()).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
        Vec v(ambient());
        for (std::size_t j = 0; j < ambient(); ++j) v[j] = other.basis_.at(i, j);
        if (!contains(v)) return false;
    }
    return true;
}

LieAlg from_brackets(
    std::size_t dim,
    const std::vector<std::tuple<int, int, Vec>>& brackets) {
    LieAlg L(dim);
    for (const auto& [i, j, value] : brackets) {
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > dim ||
            static_cast<std::size_t>(j) > dim || i >= j)
            throw IndexOutOfRange("bracket indices must satisfy 1 <= i < j <= dim");
        L.set_bracket(static_cast<std::size_t>(i - 1),
                      static_cast<std::size_t>(j - 1), value);
    }
    return L;
}

namespace {

struct TupleTerm {
    int i, j;
    Rational coeff;
};

// One tuple entry: 0, or a +/- chain of [coeff*]ij pairs.
std::vector<TupleTerm> parse_entry(const std::string& s,
                                   std::size_t entry_begin, std::size_t entry_end) {
    std::vector<TupleTerm> out;
    std::size_t p = entry_begin;
    auto skip_ws = [&] {
        while (p < entry_end && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    };
    skip_ws();
    if (p == entry_end) throw SyntaxError("empty tuple entry", p);
    if (s[p] == '0') {
        ++p;
        skip_ws();
        if (p != entry_end) throw SyntaxError("junk after 0 entry", p);
        return out;
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (p == entry_end) {
            if (first) throw SyntaxError("empty tuple entry", p);
            throw SyntaxError("dangling sign in tuple entry", p);
        }
        Rational sign(1);
        if (s[p] == '+' || s[p] == '-') {
            if (s[p] == '-') sign = -1;
            ++p;
            skip_ws();
        } else if (!first) {
            throw SyntaxError("expected '+' or '-' between terms", p);
        }
        std::size_t dstart = p;
        while (p < entry_end && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        std::size_t ndig = p - dstart;
        if (ndig == 0) throw SyntaxError("expected index pair", p);
        Rational coeff = sign;
        std::string digits = s.substr(dstart, ndig);
        skip_ws();
        if (p < entry_end && s[p] == '*') {
            ++p;
            skip_ws();
            coeff *= Rational(BigInt(digits));
            dstart = p;
            while (p < entry_end && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (p - dstart != 2)
                throw SyntaxError("index pair must be two digits", dstart);
            digits = s.substr(dstart, 2);
        } else if (ndig != 2) {
            throw SyntaxError("index pair must be two digits", dstart);
        }
        int i = digits[0] - '0';
        int j = digits[1] - '0';
        if (i == 0 || j == 0 || i >= j)
            throw SyntaxError("index pair must have 0 < i < j", dstart);
        out.push_back({i, j, coeff});
        first = false;
        skip_ws();
        if (p == entry_end) return out;
        if (s[p] != '+' && s[p] != '-')
            throw SyntaxError("expected '+' or '-' between terms", p);
    }
}

}  // namespace

LieAlg parse_tuple(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin < end && text[begin] == '(') {
        if (text[end - 1] != ')')
            throw SyntaxError("expected closing ')'", end - 1);
        ++begin;
        --end;
    }
    // split on top-level commas
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    std::size_t start = begin;
    for (std::size_t p = begin; p <= end; ++p) {
        if (p == end || text[p] == ',') {
            entries.emplace_back(start, p);
            start = p + 1;
        }
    }
    std::size_t dim = entries.size();
    if (dim == 0 || dim > 9)
        throw SyntaxError("tuple must have between 1 and 9 entries", begin);
    LieAlg L(dim);
    std::vector<std::vector<Scalar>> diff(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        auto terms = parse_entry(text, entries[k].first, entries[k].second);
        for (const auto& t : terms) {
            if (static_cast<std::size_t>(t.j) > k)
                throw NotNilpotentOrder(static_cast<int>(k + 1), t.j);
            // de^k = sum coeff e^{ij}  =>  c(i,j,k) = -coeff
            Vec v = L.bracket_basis(t.i - 1, t.j - 1);
            v[k] -= Scalar(t.coeff);
            L.set_bracket(t.i - 1, t.j - 1, v);
        }
    }
    return L;
}

namespace {

Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n, Scalar(0));
    v[k] = Scalar(1);
    return v;
}

}  // namespace

std::vector<JacobiDefect> jacobi_defect(const LieAlg& L) {
    std::vector<JacobiDefect> out;
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec d = L.bracket(L.bracket_basis(i, j), unit_vec(n, k));
                Vec d2 = L.bracket(L.bracket_basis(j, k), unit_vec(n, i));
                Vec d3 = L.bracket(L.bracket_basis(k, i), unit_vec(n, j));
                bool nonzero = false;
                Vec defect(n, Scalar(0));
                for (std::size_t t = 0; t < n; ++t) {
                    defect[t] = d[t] + d2[t] + d3[t];
                    if (!defect[t].is_zero()) nonzero = true;
                }
                if (nonzero) out.push_back({i, j, k, std::move(defect)});
            }
    return out;
}

namespace {

Subspace bracket_span(const LieAlg& L, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    const Mat& ba = a.basis();
    const Mat& bb = b.basis();
    for (std::size_t p = 0; p < ba.rows(); ++p)
        for (std::size_t q = 0; q < bb.rows(); ++q) {
            Vec x(L.dim()), y(L.dim());
            for (std::size_t t = 0; t < L.dim(); ++t) {
                x[t] = ba.at(p, t);
                y[t] = bb.at(q, t);
            }
            gens.push_back(L.bracket(x, y));
        }
    return Subspace::span(gens, L.dim());
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlg& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    while (true) {
        Subspace next = bracket_span(L, series.front(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

std::vector<Subspace> derived_series(const LieAlg& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    while (true) {
        Subspace next = bracket_span(L, series.back(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

namespace {

// {X | [X, e_j] in W for all j}, exactly.
Subspace relative_centralizer(const LieAlg& L, const Subspace& W) {
    const std::size_t n = L.dim();
    const Mat& wb = W.basis();
    // pivot columns of the echelon basis
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0, col = 0; r < wb.rows(); ++r) {
        while (col < n && wb.at(r, col).is_zero()) ++col;
        pivots.push_back(col);
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Vec> constraint_rows;
    for (std::size_t j = 0; j < n; ++j) {
        // [e_i, e_j] reduced against W leaves linear conditions on x_i
        for (std::size_t q = 0; q < n; ++q) {
            if (is_pivot[q]) continue;
            Vec row(n, Scalar(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                Scalar entry = L.c(i, j, q);
                for (std::size_t r = 0; r < pivots.size(); ++r)
                    entry -= L.c(i, j, pivots[r]) * wb.at(r, q);
                if (!entry.is_zero()) nonzero = true;
                row[i] = entry;
            }
            if (nonzero) constraint_rows.push_back(std::move(row));
        }
    }
    if (constraint_rows.empty()) return Subspace::full(n);
    Mat constraints(constraint_rows.size(), n);
    for (std::size_t r = 0; r < constraint_rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            constraints.at(r, c) = constraint_rows[r][c];
    return Subspace::span(constraints.nullspace(), n);
}

}  // namespace

std::vector<Subspace> ascending_central_series(const LieAlg& L) {
    std::vector<Subspace> series{Subspace::zero(L.dim())};
    while (true) {
        Subspace next = relative_centralizer(L, series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(next);
        if (next.dim() == L.dim()) break;
    }
    return series;
}

Subspace center(const LieAlg& L) {
    return relative_centralizer(L, Subspace::zero(L.dim()));
}

std::optional<int> nilpotency_step(const LieAlg& L) {
    auto series = lower_central_series(L);
    if (series.back().dim() != 0) return std::nullopt;
    return static_cast<int>(series.size()) - 1;
}

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
    std::vector<std::size_t> out;
    out.reserve(series.size());
    for (const auto& s : series) out.push_back(s.dim());
    return out;
}

}  // namespace stableforms
