#ifndef SBO_ERRORS_HPP
#define SBO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbo {

// Gamma-function ratio hits a genuine pole (division by a zero factor).
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A real-valued operation received a number with nonzero imaginary part.
struct NonRealError : std::domain_error {
    explicit NonRealError(const std::string& what) : std::domain_error(what) {}
};

struct NegativeDegreeError : std::domain_error {
    explicit NegativeDegreeError(const std::string& what) : std::domain_error(what) {}
};

// m = 0 is outside the supported parameter range.
struct ZeroMError : std::domain_error {
    explicit ZeroMError(const std::string& what) : std::domain_error(what) {}
};

// Harmonic generator requested for k outside K(m).
struct IndexError : std::domain_error {
    explicit IndexError(const std::string& what) : std::domain_error(what) {}
};

// Polynomial violates a degree/parity constraint.
struct ParityError : std::domain_error {
    explicit ParityError(const std::string& what) : std::domain_error(what) {}
};

// Parameters fall outside the one-dimensional solution locus.
struct NotAdmissibleError : std::domain_error {
    explicit NotAdmissibleError(const std::string& what) : std::domain_error(what) {}
};

// An operator order that must be a natural number is not.
struct NotNaturalError : std::domain_error {
    explicit NotNaturalError(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbo

#endif
