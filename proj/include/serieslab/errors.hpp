#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace serieslab {

// Bad arguments to a constructor or builder (shape mismatch, non-positive
// model parameter, non-finite value).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a closed-form expression.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Base for failures of an iterative numerical procedure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotEstimableError : public NumericError {
public:
    using NumericError::NumericError;
};

class BracketError : public NumericError {
public:
    using NumericError::NumericError;
};

class AccuracyError : public NumericError {
public:
    using NumericError::NumericError;
};

class NearSingularError : public NumericError {
public:
    using NumericError::NumericError;
};

class AnalysisError : public NumericError {
public:
    using NumericError::NumericError;
};

// The closed-form Riccati solution has a real pole between 0 and the
// requested time.
class BlowUpError : public NumericError {
public:
    BlowUpError(const std::string& what, double pole_time)
        : NumericError(what), pole_time_(pole_time) {}
    double pole_time() const noexcept { return pole_time_; }

private:
    double pole_time_;
};

// Multistage stepping produced a non-finite or runaway state.
class DivergenceError : public NumericError {
public:
    DivergenceError(const std::string& what, std::size_t step_index)
        : NumericError(what), step_index_(step_index) {}
    std::size_t step_index() const noexcept { return step_index_; }

private:
    std::size_t step_index_;
};

// Adaptive integration could not continue (step-size underflow).
class IntegrationError : public NumericError {
public:
    IntegrationError(const std::string& what, double last_good_time)
        : NumericError(what), last_good_time_(last_good_time) {}
    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

}  // namespace serieslab
