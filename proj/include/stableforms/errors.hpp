#ifndef STABLEFORMS_ERRORS_HPP
#define STABLEFORMS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stableforms {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero scalar") {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& where)
        : Error("denominator vanishes at sample point: " + where) {}
};

// Parse failure; position is a 0-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// Tuple entry k touches e^j with j >= k, so the algebra cannot be
// triangular-nilpotent in the given basis order.
class NotNilpotentOrder : public Error {
public:
    NotNilpotentOrder(int entry, int index)
        : Error("entry " + std::to_string(entry) + " references e^" +
                std::to_string(index) + " which is not below it") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

class UnstableForm : public Error {
public:
    UnstableForm() : Error("3-form is unstable (lambda = 0)") {}
};

// |lambda| has no square root in the rational-function field, so the
// normalized structure J = K/sqrt|lambda| is not representable exactly.
class NonSquareLambda : public Error {
public:
    NonSquareLambda() : Error("sqrt|lambda| is not a rational function") {}
};

class NotParaComplex : public Error {
public:
    NotParaComplex() : Error("eigen-distributions need eps = +1") {}
};

class AsymmetricResult : public Error {
public:
    AsymmetricResult() : Error("omega(JX,JY) != -eps*omega(X,Y); metric would not be symmetric") {}
};

class SingularMetric : public Error {
public:
    SingularMetric() : Error("metric matrix is singular") {}
};

class DegeneratePoint : public Error {
public:
    explicit DegeneratePoint(int tries)
        : Error("no nondegenerate sample point found after " +
                std::to_string(tries) + " retries") {}
};

class UnknownScenario : public Error {
public:
    explicit UnknownScenario(const std::string& id)
        : Error("unknown scenario id: " + id) {}
};

class UnknownAlgebra : public Error {
public:
    explicit UnknownAlgebra(const std::string& id)
        : Error("unknown algebra id: " + id) {}
};

}  // namespace stableforms

#endif
