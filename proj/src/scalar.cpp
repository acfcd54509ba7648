#include "stableforms/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "stableforms/errors.hpp"

namespace stableforms {

Scalar::Scalar(int v)
    : num_(Polynomial::constant(Rational(v))), den_(Polynomial::constant(1)) {}

Scalar::Scalar(const Rational& v)
    : num_(Polynomial::constant(v)), den_(Polynomial::constant(1)) {}

Scalar::Scalar(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(1)) {}

Scalar::Scalar(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    reduce();
}

Scalar Scalar::symbol(SymbolId id) {
    return Scalar(Polynomial::variable(id));
}

Scalar Scalar::coeff(int i, int j) {
    return Scalar::symbol(SymbolTable::coeff(i, j));
}

bool Scalar::is_one() const {
    return num_ == den_;
}

bool Scalar::is_rational() const {
    return num_.is_constant() && den_.is_constant();
}

Rational Scalar::rational_value() const {
    return num_.constant_value() / den_.constant_value();
}

void Scalar::reduce() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = *Polynomial::divide_exact(num_, g);
        den_ = *Polynomial::divide_exact(den_, g);
    }
    // clear rational content from the denominator, keep lead positive
    Rational c = den_.content();
    if (den_.leading().coeff < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(Rational(1) / c);
        num_ = num_.scaled(Rational(1) / c);
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    // Henrici: split off the common denominator factor first
    Polynomial g0 = Polynomial::gcd(den_, rhs.den_);
    if (g0.is_constant()) {
        Scalar r;
        r.num_ = num_ * rhs.den_ + rhs.num_ * den_;
        r.den_ = den_ * rhs.den_;
        if (r.num_.is_zero()) return Scalar();
        // coprime denominators: result already reduced up to content
        Rational c = r.den_.content();
        if (r.den_.leading().coeff < 0) c = -c;
        if (c != 1) {
            r.den_ = r.den_.scaled(Rational(1) / c);
            r.num_ = r.num_.scaled(Rational(1) / c);
        }
        return r;
    }
    Polynomial b1 = *Polynomial::divide_exact(den_, g0);
    Polynomial d1 = *Polynomial::divide_exact(rhs.den_, g0);
    Polynomial t = num_ * d1 + rhs.num_ * b1;
    if (t.is_zero()) return Scalar();
    Polynomial h = Polynomial::gcd(t, g0);
    Scalar r;
    if (h.is_constant()) {
        r.num_ = t;
        r.den_ = g0 * b1 * d1;
    } else {
        r.num_ = *Polynomial::divide_exact(t, h);
        r.den_ = *Polynomial::divide_exact(g0, h) * b1 * d1;
    }
    Rational c = r.den_.content();
    if (r.den_.leading().coeff < 0) c = -c;
    if (c != 1) {
        r.den_ = r.den_.scaled(Rational(1) / c);
        r.num_ = r.num_.scaled(Rational(1) / c);
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return *this + (-rhs);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    if (is_zero() || rhs.is_zero()) return Scalar();
    Polynomial g1 = Polynomial::gcd(num_, rhs.den_);
    Polynomial g2 = Polynomial::gcd(rhs.num_, den_);
    Polynomial a = g1.is_constant() ? num_ : *Polynomial::divide_exact(num_, g1);
    Polynomial d = g1.is_constant() ? rhs.den_
                                    : *Polynomial::divide_exact(rhs.den_, g1);
    Polynomial c = g2.is_constant() ? rhs.num_
                                    : *Polynomial::divide_exact(rhs.num_, g2);
    Polynomial b = g2.is_constant() ? den_ : *Polynomial::divide_exact(den_, g2);
    Scalar r;
    r.num_ = a * c;
    r.den_ = b * d;
    Rational cc = r.den_.content();
    if (r.den_.leading().coeff < 0) cc = -cc;
    if (cc != 1) {
        r.den_ = r.den_.scaled(Rational(1) / cc);
        r.num_ = r.num_.scaled(Rational(1) / cc);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    Rational c = r.den_.content();
    if (r.den_.leading().coeff < 0) c = -c;
    if (c != 1) {
        r.den_ = r.den_.scaled(Rational(1) / c);
        r.num_ = r.num_.scaled(Rational(1) / c);
    }
    return r;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(1);
    Scalar b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

Rational Scalar::eval(const std::map<SymbolId, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw PoleAtPoint(format());
    return num_.eval(point) / d;
}

namespace {

Scalar eval_poly_scalar(const Polynomial& p,
                        const std::map<SymbolId, Scalar>& subs) {
    Scalar total(0);
    for (const auto& t : p.terms()) {
        Scalar v(t.coeff);
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            auto it = subs.find(i);
            Scalar base = (it != subs.end()) ? it->second : Scalar::symbol(i);
            v = v * base.pow(t.exps[i]);
        }
        total = total + v;
    }
    return total;
}

}  // namespace

Scalar Scalar::substitute(const std::map<SymbolId, Scalar>& subs) const {
    Scalar n = eval_poly_scalar(num_, subs);
    Scalar d = eval_poly_scalar(den_, subs);
    if (d.is_zero()) throw PoleAtPoint(format());
    return n / d;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
    auto ns = num_.sqrt_exact();
    if (!ns) return std::nullopt;
    auto ds = den_.sqrt_exact();
    if (!ds) return std::nullopt;
    Scalar r;
    r.num_ = *ns;
    r.den_ = *ds;
    return r;
}

std::vector<SymbolId> Scalar::symbols() const {
    std::vector<SymbolId> n = num_.symbols();
    for (SymbolId s : den_.symbols())
        if (std::find(n.begin(), n.end(), s) == n.end()) n.push_back(s);
    std::sort(n.begin(), n.end());
    return n;
}

std::string Scalar::format() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.format();
    return "(" + num_.format() + ")/(" + den_.format() + ")";
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero())
                    throw SyntaxError("division by zero in literal", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        Scalar v = atom();
        while (accept('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw SyntaxError("exponent must be a non-negative integer", pos_);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 1000000) throw SyntaxError("exponent too large", pos_);
                ++pos_;
            }
            v = v.pow(static_cast<unsigned>(e));
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            BigInt n(s_.substr(start, pos_ - start));
            return Scalar(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Scalar::symbol(SymbolTable::intern(s_.substr(start, pos_ - start)));
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace

Scalar scalar_parse(const std::string& text) {
    return ExprParser(text).parse();
}

}  // namespace stableforms
