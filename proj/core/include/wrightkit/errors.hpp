#pragma once

#include <stdexcept>
#include <string>

namespace wrightkit {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A Gamma factor was evaluated at a non-positive integer where the result
// would be infinite (and is not absorbed by a reciprocal).
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A finite double cannot represent the result.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A root/minimum search failed to bracket or settle.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// The series stopping rule was not met within the term budget.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

// The Fox-Wright convergence condition 1 + sum(beta_j) - sum(alpha_i) > 0 fails.
class ConvergenceDomainError : public Error {
public:
    explicit ConvergenceDomainError(const std::string& msg) : Error(msg) {}
};

// Quadrature could not reach the requested tolerance at maximum refinement.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

// A probe that needs f > 0 sampled a non-positive value.
class PositivityError : public Error {
public:
    explicit PositivityError(const std::string& msg) : Error(msg) {}
};

// Malformed sweep/CLI configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace wrightkit
