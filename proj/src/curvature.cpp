#include "stableforms/curvature.hpp"

#include <algorithm>
#include <set>

#include "stableforms/errors.hpp"

namespace stableforms {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                           97};
constexpr std::size_t kPrimeCount = sizeof(kPrimes) / sizeof(kPrimes[0]);

bool is_used_prime(const std::map<SymbolId, Rational>& point, int p) {
    for (const auto& [id, v] : point)
        if (v == Rational(p)) return true;
    return false;
}

// Primes available for perturbing `point`, in table order.
std::vector<int> unused_primes(const std::map<SymbolId, Rational>& point) {
    std::vector<int> out;
    for (std::size_t k = 0; k < kPrimeCount; ++k)
        if (!is_used_prime(point, kPrimes[k])) out.push_back(kPrimes[k]);
    return out;
}

std::optional<std::pair<int, int>> try_signature(const Mat& g,
                                                 const std::map<SymbolId,
                                                                Rational>&
                                                     point) {
    RatMat numeric;
    try {
        numeric = eval_matrix(g, point);
    } catch (const PoleAtPoint&) {
        return std::nullopt;
    }
    std::pair<int, int> sig = inertia(numeric);
    if (static_cast<std::size_t>(sig.first + sig.second) != g.rows())
        return std::nullopt;
    return sig;
}

// The base point, then perturbations of the canonically last symbol.
// Walks candidates until `want` signatures are collected; every failed
// candidate consumes one unit of the retry budget.
std::vector<std::pair<int, int>> collect_signatures(
    const Mat& g, const std::map<SymbolId, Rational>& start,
    std::size_t want, int retry_budget) {
    std::vector<std::pair<int, int>> got;
    std::map<SymbolId, Rational> current = start;
    std::vector<int> spare = unused_primes(start);
    std::size_t next_spare = 0;
    int tries = 0;
    for (;;) {
        auto sig = try_signature(g, current);
        if (sig) {
            got.push_back(*sig);
            if (got.size() == want) return got;
            // a fully numeric matrix has only the one point to offer
            if (current.empty()) {
                got.resize(want, *sig);
                return got;
            }
        } else {
            ++tries;
            if (tries > retry_budget) throw DegeneratePoint(tries);
        }
        if (current.empty() || next_spare == spare.size())
            throw DegeneratePoint(tries);
        current[current.rbegin()->first] = Rational(spare[next_spare++]);
    }
}

}  // namespace

Metric metric_from(const Mat& g) {
    if (g != g.transpose()) throw AsymmetricResult();
    Metric m;
    m.g = g;
    try {
        m.ginv = g.inverse();
    } catch (const Error&) {
        throw SingularMetric();
    }
    return m;
}

Metric associated_metric(const Form& w, const EpsStructure& s) {
    Mat wm = two_form_matrix(w);
    if (s.J.transpose() * wm * s.J != wm.scaled(Scalar(-s.eps)))
        throw AsymmetricResult();
    Metric m;
    m.g = wm * s.J;
    try {
        m.ginv = m.g.inverse();
    } catch (const Error&) {
        throw SingularMetric();
    }
    return m;
}

Tensor3::Tensor3(std::size_t dim)
    : dim_(dim), data_(dim * dim * dim, Scalar(0)) {}

Scalar& Tensor3::at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
}

const Scalar& Tensor3::at(std::size_t i, std::size_t j,
                          std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
}

Tensor4::Tensor4(std::size_t dim)
    : dim_(dim), data_(dim * dim * dim * dim, Scalar(0)) {}

Scalar& Tensor4::at(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t s) {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + s];
}

const Scalar& Tensor4::at(std::size_t i, std::size_t j, std::size_t k,
                          std::size_t s) const {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + s];
}

Tensor3 christoffel(const LieAlg& L, const Metric& m) {
    const std::size_t n = L.dim();
    if (m.g.rows() != n)
        throw DimensionMismatch("metric size does not match the algebra");

    // T(i, j, k) = sum_p C^p_ij g_pk
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k) {
                Scalar s(0);
                for (std::size_t p = 0; p < n; ++p) {
                    const Scalar& c = L.c(i, j, p);
                    if (!c.is_zero()) s += c * m.g.at(p, k);
                }
                t.at(i, j, k) = s;
            }
        }

    const Scalar half(Rational(1, 2));
    Tensor3 gamma(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t nn = 0; nn < n; ++nn) {
                Scalar s(0);
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& w = m.ginv.at(k, nn);
                    if (w.is_zero()) continue;
                    s += w * (t.at(i, j, k) + t.at(k, i, j) + t.at(k, j, i));
                }
                gamma.at(i, j, nn) = s * half;
            }
    return gamma;
}

Tensor4 riemann(const LieAlg& L, const Tensor3& gamma) {
    const std::size_t n = gamma.dim();
    Tensor4 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t s = 0; s < n; ++s) {
                    Scalar v(0);
                    for (std::size_t p = 0; p < n; ++p) {
                        v += gamma.at(i, p, s) * gamma.at(j, k, p);
                        v -= gamma.at(j, p, s) * gamma.at(i, k, p);
                        const Scalar& c = L.c(i, j, p);
                        if (!c.is_zero()) v -= c * gamma.at(p, k, s);
                    }
                    r.at(i, j, k, s) = v;
                }
    return r;
}

Mat ricci(const Tensor4& r) {
    const std::size_t n = r.dim();
    Mat ric(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Scalar s(0);
            for (std::size_t i = 0; i < n; ++i) s += r.at(i, a, b, i);
            ric.at(a, b) = s;
        }
    return ric;
}

Mat ricci_operator(const Metric& m, const Mat& ric) {
    return m.ginv * ric;
}

Scalar scalar_curvature(const Metric& m, const Mat& ric) {
    const std::size_t n = ric.rows();
    Scalar s(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& w = m.ginv.at(i, j);
            if (!w.is_zero()) s += w * ric.at(i, j);
        }
    return s;
}

bool is_einstein(const Metric& m, const Mat& ric) {
    const std::size_t n = m.g.rows();
    Scalar c(0);
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = 0; j < n && !found; ++j)
            if (!m.g.at(i, j).is_zero()) {
                c = ric.at(i, j) / m.g.at(i, j);
                found = true;
            }
    return ric == m.g.scaled(c);
}

CurvatureReport curvature_report(const LieAlg& L, const Metric& m,
                                 int retry_budget) {
    Tensor3 gamma = christoffel(L, m);
    Tensor4 riem = riemann(L, gamma);
    Mat ric = ricci(riem);
    CurvatureReport report{std::move(gamma),
                           std::move(riem),
                           ric,
                           ricci_operator(m, ric),
                           scalar_curvature(m, ric),
                           is_einstein(m, ric),
                           {0, 0}};
    report.signature =
        signature_at(m, base_point(matrix_symbols(m.g)), retry_budget);
    return report;
}

std::vector<SymbolId> matrix_symbols(const Mat& m) {
    std::set<SymbolId> ids;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (SymbolId id : m.at(i, j).symbols()) ids.insert(id);
    return {ids.begin(), ids.end()};
}

std::map<SymbolId, Rational> base_point(
    const std::vector<SymbolId>& symbols) {
    const std::size_t canonical = SymbolTable::canonical().size();
    std::map<SymbolId, Rational> point;
    for (SymbolId id : symbols)
        if (id < canonical) point.emplace(id, Rational(kPrimes[id]));
    // symbols outside the canonical block take the primes after it
    std::size_t next = canonical;
    for (SymbolId id : symbols) {
        if (id < canonical) continue;
        while (next < kPrimeCount && is_used_prime(point, kPrimes[next]))
            ++next;
        if (next == kPrimeCount) throw DegeneratePoint(0);
        point.emplace(id, Rational(kPrimes[next++]));
    }
    return point;
}

std::vector<std::map<SymbolId, Rational>> sample_points(
    const std::vector<SymbolId>& symbols, std::size_t count) {
    std::map<SymbolId, Rational> base = base_point(symbols);
    std::vector<std::map<SymbolId, Rational>> points{base};
    if (base.empty()) {
        points.resize(count == 0 ? 1 : count, base);
        points.resize(count);
        return points;
    }
    std::vector<int> spare = unused_primes(base);
    std::size_t next = 0;
    while (points.size() < count) {
        if (next == spare.size()) throw DegeneratePoint(0);
        std::map<SymbolId, Rational> p = points.back();
        p[p.rbegin()->first] = Rational(spare[next++]);
        points.push_back(std::move(p));
    }
    points.resize(count);
    return points;
}

std::pair<int, int> signature_at(const Metric& m,
                                 const std::map<SymbolId, Rational>& point,
                                 int retry_budget) {
    return collect_signatures(m.g, point, 1, retry_budget).front();
}

std::vector<std::pair<int, int>> signature_samples(const Metric& m,
                                                   std::size_t count,
                                                   int retry_budget) {
    std::map<SymbolId, Rational> start = base_point(matrix_symbols(m.g));
    return collect_signatures(m.g, start, count, retry_budget);
}

}  // namespace stableforms
