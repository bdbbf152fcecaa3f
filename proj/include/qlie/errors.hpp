#ifndef QLIE_ERRORS_HPP
#define QLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlie {

// Shape or arity mismatch between operands (wrong dims, mixed orders, ...).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A formal series with zero constant term was asked for its reciprocal.
class SingularSeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data that fails a precondition (invalid bialgebra, refused morphism).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A self-check inside the kernel fired: broken input slipped through or an
// arithmetic bug. Never expected on validated data.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qlie

#endif
