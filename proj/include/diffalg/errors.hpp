#ifndef DIFFALG_ERRORS_HPP
#define DIFFALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffalg {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression text failed to parse; offset is the byte position of the problem.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// A denominator has an irreducible factor of degree >= 2 over the rationals,
// so the input is outside the restricted solver class.
class NonSplitDenominator : public Error {
public:
    explicit NonSplitDenominator(const std::string& msg) : Error(msg) {}
};

// Input matrix falls outside the supported (diagonal / 2x2 triangular) class.
class UnsupportedClass : public Error {
public:
    explicit UnsupportedClass(const std::string& msg) : Error(msg) {}
};

// Diagonal entries of a triangular system fall outside the rank-1 class.
class NotInClass : public Error {
public:
    explicit NotInClass(const std::string& msg) : Error(msg) {}
};

class SingularGauge : public Error {
public:
    explicit SingularGauge(const std::string& msg = "gauge matrix is singular") : Error(msg) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

class SizeLimit : public Error {
public:
    explicit SizeLimit(const std::string& msg) : Error(msg) {}
};

// Element has no inverse in the hyperexponential-tower model
// (only single-term tower elements are invertible).
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

} // namespace diffalg

#endif
