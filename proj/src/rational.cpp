#include "stableforms/rational.hpp"

namespace stableforms {

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

namespace {

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> rat_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto ns = int_sqrt_exact(rat_num(r));
    auto ds = int_sqrt_exact(rat_den(r));
    if (!ns || !ds) return std::nullopt;
    return Rational(*ns, *ds);
}

std::string rat_format(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace stableforms
