#pragma once

#include <stdexcept>
#include <string>

namespace mrpot {

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (r <= 0, non-finite input, ...).
class domain_error : public error
{
public:
    using error::error;
};

/// The potential has no interior minimum for the given parameters.
class no_minimum_error : public error
{
public:
    using error::error;
};

/// Linear system for the approximation coefficients is singular.
class degenerate_system_error : public error
{
public:
    using error::error;
};

/// Requested (n, l) level is not bound for the given coupling.
class unbound_state_error : public error
{
public:
    unbound_state_error(std::string const& what, double critical_A)
      : error(what)
      , critical_A_(critical_A)
    {
    }

    /// Coupling A above which the level becomes bound.
    double critical_A() const noexcept { return critical_A_; }

private:
    double critical_A_;
};

/// Quadrature, overflow or other numerical breakdown.
class numeric_error : public error
{
public:
    using error::error;
};

/// Energy bracket of the shooting solver does not enclose the wanted level.
class bracket_error : public error
{
public:
    using error::error;
};

/// Malformed input file or label.
class parse_error : public error
{
public:
    using error::error;
};

} // namespace mrpot
