#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kisinlab {

// Base for every error the library raises.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-side contract was violated (bad parameters, malformed input).
class precondition_error : public error {
public:
    using error::error;
};

// Raised when a decision would need coefficients past a series' known precision.
class insufficient_precision : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    using error::error;
};

class singular_matrix : public error {
public:
    using error::error;
};

class field_mismatch : public error {
public:
    using error::error;
};

// An enumeration would exceed its configured candidate budget.
class budget_exceeded : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

// A computed object contradicts a statement the library checks (a move
// whose witness fails, a lemma counterexample). Carries the offending model.
class falsification : public error {
public:
    falsification(const std::string& what, std::size_t model_id) : error(what), model_id_(model_id) {}
    std::size_t model_id() const noexcept { return model_id_; }

private:
    std::size_t model_id_;
};

}  // namespace kisinlab
