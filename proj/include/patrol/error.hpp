#pragma once

#include <stdexcept>
#include <string>

namespace patrol {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A distance matrix that is not a metric. `triple` holds the offending
/// (i, j, m) indices; for asymmetry or diagonal errors m repeats j or i.
class MetricViolation : public InvalidInput {
public:
    MetricViolation(const std::string& what, int i, int j, int m)
        : InvalidInput(what), i_(i), j_(j), m_(m) {}

    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }
    int m() const noexcept { return m_; }

private:
    int i_, j_, m_;
};

/// A desk-scale limit (subset size, state-space size, ...) was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class InfeasibleAssignment : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotConnected : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class PreconditionViolated : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotRenderable : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

} // namespace patrol
