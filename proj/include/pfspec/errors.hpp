#pragma once

#include <stdexcept>

namespace pfspec {

/// Input outside the mathematical domain of an operation (bad quantum numbers,
/// non-positive scales, complex radial index, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A root or eigenvalue bracket does not enclose a sign change.
class BracketError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A converged eigenvalue carries a different node count than requested.
class SpectrumOrderingError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Branch of a quadratic-type secular equation.
enum class Branch
{
    Plus,
    Minus
};

} // namespace pfspec
