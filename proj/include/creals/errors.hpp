#ifndef CREALS_ERRORS_HPP
#define CREALS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace creals {

struct InvalidWitnessError : std::runtime_error {
    explicit InvalidWitnessError(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeInputError : std::runtime_error {
    explicit NegativeInputError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeNotOddError : std::runtime_error {
    explicit DegreeNotOddError(const std::string& what) : std::runtime_error(what) {}
};

struct FuelExhaustedError : std::runtime_error {
    explicit FuelExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

struct BlowupCapError : std::runtime_error {
    explicit BlowupCapError(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundVariableError : std::runtime_error {
    explicit UnboundVariableError(const std::string& what) : std::runtime_error(what) {}
};

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    size_t pos;
};

}  // namespace creals

#endif
