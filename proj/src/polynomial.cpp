#include "stableforms/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "stableforms/errors.hpp"

namespace stableforms {

namespace {

unsigned exp_at(const ExpVec& v, std::size_t i) {
    return i < v.size() ? v[i] : 0u;
}

unsigned exp_total(const ExpVec& v) {
    unsigned t = 0;
    for (unsigned e : v) t += e;
    return t;
}

void exp_trim(ExpVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = exp_at(a, i) + exp_at(b, i);
    return r;
}

// a / b when b divides a componentwise.
bool exp_div(const ExpVec& a, const ExpVec& b, ExpVec& out) {
    if (exp_at(b, a.size()) != 0) {
        // b has a variable a lacks entirely
        for (std::size_t i = a.size(); i < b.size(); ++i)
            if (b[i] != 0) return false;
    }
    out.assign(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned bi = exp_at(b, i);
        if (bi > a[i]) return false;
        out[i] = a[i] - bi;
    }
    exp_trim(out);
    return true;
}

}  // namespace

int grlex_compare(const ExpVec& a, const ExpVec& b) {
    unsigned da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db ? -1 : 1;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = exp_at(a, i), eb = exp_at(b, i);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({ExpVec{}, c});
    return p;
}

Polynomial Polynomial::variable(SymbolId id) {
    ExpVec e(id + 1, 0);
    e[id] = 1;
    Polynomial p;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(const ExpVec& exps, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) {
        ExpVec e = exps;
        exp_trim(e);
        p.terms_.push_back({std::move(e), coeff});
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

const Rational& Polynomial::constant_value() const {
    static const Rational kZero(0);
    if (terms_.empty()) return kZero;
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_[0].coeff;
}

const Polynomial::Term& Polynomial::leading() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_[0];
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0u : exp_total(terms_[0].exps);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    // merge two descending-sorted term lists
    Polynomial r;
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = grlex_compare(terms_[i].exps, rhs.terms_[j].exps);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(rhs.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + rhs.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].exps, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    PolyBuilder b;
    for (const auto& t1 : terms_)
        for (const auto& t2 : rhs.terms_)
            b.add(exp_mul(t1.exps, t2.exps), t1.coeff * t2.coeff);
    return b.build();
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(1);
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != rhs.terms_[i].coeff) return false;
        if (grlex_compare(terms_[i].exps, rhs.terms_[i].exps) != 0) return false;
    }
    return true;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& t : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(t.coeff));
        BigInt d = rat_den(t.coeff);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / content());
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& f,
                                                   const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    Polynomial rem = f;
    Polynomial quot;
    const Term& glt = g.leading();
    while (!rem.is_zero()) {
        ExpVec qe;
        if (!exp_div(rem.leading().exps, glt.exps, qe)) return std::nullopt;
        Polynomial t = Polynomial::monomial(qe, rem.leading().coeff / glt.coeff);
        quot = quot + t;
        rem = rem - t * g;
    }
    return quot;
}

namespace {

// Views a multivariate polynomial as univariate in the symbol `v`.
std::map<unsigned, Polynomial> split_by(const Polynomial& p, SymbolId v) {
    std::map<unsigned, Polynomial> out;
    std::map<unsigned, PolyBuilder> builders;
    for (const auto& t : p.terms()) {
        unsigned e = v < t.exps.size() ? t.exps[v] : 0u;
        ExpVec rest = t.exps;
        if (v < rest.size()) rest[v] = 0;
        builders[e].add(rest, t.coeff);
    }
    for (auto& [e, b] : builders) out[e] = b.build();
    return out;
}

unsigned degree_in(const Polynomial& p, SymbolId v) {
    unsigned d = 0;
    for (const auto& t : p.terms())
        d = std::max(d, v < t.exps.size() ? t.exps[v] : 0u);
    return d;
}

std::optional<SymbolId> main_variable(const Polynomial& f, const Polynomial& g) {
    std::optional<SymbolId> best;
    auto scan = [&](const Polynomial& p) {
        for (const auto& t : p.terms())
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                if (t.exps[i] != 0 && (!best || i > *best))
                    best = i;
    };
    scan(f);
    scan(g);
    return best;
}

Polynomial exact_div_or_throw(const Polynomial& f, const Polynomial& g) {
    auto q = Polynomial::divide_exact(f, g);
    if (!q) throw Error("internal: inexact division in gcd chain");
    return *q;
}

// gcd of the univariate-in-v coefficient list of p (its content in v).
Polynomial content_in(const std::map<unsigned, Polynomial>& coeffs) {
    Polynomial c;
    for (const auto& [e, p] : coeffs) c = Polynomial::gcd(c, p);
    return c;
}

// Pseudo-remainder of f by g in variable v: lc(g)^(df-dg+1) f mod g.
Polynomial pseudo_rem(Polynomial f, const Polynomial& g, SymbolId v) {
    unsigned dg = degree_in(g, v);
    unsigned df0 = degree_in(f, v);
    if (df0 < dg) return f;
    auto gc = split_by(g, v);
    Polynomial glc = gc.rbegin()->second;
    Polynomial x = Polynomial::variable(v);
    unsigned used = 0;
    while (!f.is_zero()) {
        unsigned df = degree_in(f, v);
        if (df < dg) break;
        auto fc = split_by(f, v);
        Polynomial flc = fc.rbegin()->second;
        f = f * glc - g * flc * x.pow(df - dg);
        ++used;
    }
    // pad to the canonical power so subresultant divisors stay exact
    unsigned want = df0 - dg + 1;
    for (; used < want; ++used) f = f * glc;
    return f;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& f, const Polynomial& g) {
    auto normalize = [](Polynomial p) {
        if (p.is_zero()) return p;
        p = p.primitive_part();
        if (p.leading().coeff < 0) p = -p;
        return p;
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);

    Polynomial F = normalize(f);
    Polynomial G = normalize(g);
    auto mv = main_variable(F, G);
    if (!mv) return Polynomial::constant(1);
    SymbolId v = *mv;

    auto fc = split_by(F, v);
    auto gc = split_by(G, v);
    Polynomial contF = content_in(fc);
    Polynomial contG = content_in(gc);
    Polynomial cont = Polynomial::gcd(contF, contG);
    Polynomial A = exact_div_or_throw(F, contF);
    Polynomial B = exact_div_or_throw(G, contG);

    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);

    // subresultant polynomial remainder sequence
    Polynomial h = Polynomial::constant(1);
    Polynomial s = Polynomial::constant(1);
    while (true) {
        unsigned da = degree_in(A, v);
        unsigned db = degree_in(B, v);
        // a nonzero v-free remainder means the v-primitive parts are coprime
        if (db == 0) return normalize(cont);
        unsigned d = da - db;
        Polynomial R = pseudo_rem(A, B, v);
        if (R.is_zero()) {
            auto bc = split_by(B, v);
            Polynomial prim = exact_div_or_throw(B, content_in(bc));
            return normalize(cont * prim);
        }
        Polynomial blc = split_by(B, v).rbegin()->second;
        Polynomial divisor = s * h.pow(d);
        A = B;
        B = exact_div_or_throw(R, divisor);
        s = blc;
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = s;
        } else {
            h = exact_div_or_throw(s.pow(d), h.pow(d - 1));
        }
    }
}

std::optional<Polynomial> Polynomial::sqrt_exact() const {
    if (is_zero()) return Polynomial();
    const Term& lt = leading();
    ExpVec half = lt.exps;
    for (auto& e : half) {
        if (e % 2) return std::nullopt;
        e /= 2;
    }
    auto c = rat_sqrt(lt.coeff);
    if (!c) return std::nullopt;
    Polynomial root = Polynomial::monomial(half, *c);
    Polynomial rem = *this - root * root;
    Polynomial twice_lead = Polynomial::monomial(half, 2 * *c);
    std::size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 100000) return std::nullopt;
        ExpVec qe;
        if (!exp_div(rem.leading().exps, twice_lead.leading().exps, qe))
            return std::nullopt;
        Polynomial t = Polynomial::monomial(
            qe, rem.leading().coeff / twice_lead.leading().coeff);
        // candidate terms must keep strictly descending, below the lead
        if (grlex_compare(t.leading().exps, half) >= 0) return std::nullopt;
        root = root + t;
        rem = *this - root * root;
    }
    if (root.leading().coeff < 0) root = -root;
    return root;
}

Rational Polynomial::eval(const std::map<SymbolId, Rational>& point) const {
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            auto it = point.find(i);
            if (it == point.end())
                throw Error("unassigned symbol in evaluation: " +
                            SymbolTable::name(i));
            v *= rat_pow(it->second, t.exps[i]);
        }
        total += v;
    }
    return total;
}

std::vector<SymbolId> Polynomial::symbols() const {
    std::vector<SymbolId> out;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0 &&
                std::find(out.begin(), out.end(), i) == out.end())
                out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Polynomial::format() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += SymbolTable::name(i);
            if (t.exps[i] > 1) vars += "^" + std::to_string(t.exps[i]);
        }
        if (vars.empty()) {
            out += rat_format(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += rat_format(c) + "*" + vars;
        }
    }
    return out;
}

void Polynomial::insert_term(const ExpVec& exps, const Rational& coeff) {
    if (coeff == 0) return;
    ExpVec e = exps;
    exp_trim(e);
    terms_.push_back({std::move(e), coeff});
}

void PolyBuilder::add(const ExpVec& exps, const Rational& coeff) {
    if (coeff == 0) return;
    ExpVec e = exps;
    exp_trim(e);
    auto [it, inserted] = acc_.emplace(std::move(e), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc_.erase(it);
    }
}

Polynomial PolyBuilder::build() {
    Polynomial p;
    p.terms_.reserve(acc_.size());
    for (auto& [e, c] : acc_) p.terms_.push_back({e, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Polynomial::Term& a, const Polynomial::Term& b) {
                  return grlex_compare(a.exps, b.exps) > 0;
              });
    acc_.clear();
    return p;
}

}  // namespace stableforms
