#ifndef CYBRA_ERRORS_HPP
#define CYBRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cybra {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Diagram construction / composition
struct not_a_matching : error {
    explicit not_a_matching(const std::string& w) : error("NotAMatching: " + w) {}
};
struct bad_label : error {
    explicit bad_label(const std::string& w) : error("BadLabel: " + w) {}
};
struct size_mismatch : error {
    explicit size_mismatch(const std::string& w) : error("SizeMismatch: " + w) {}
};
struct bad_modulus : error {
    explicit bad_modulus(const std::string& w) : error("BadModulus: " + w) {}
};

// Coefficient ring
struct context_mismatch : error {
    explicit context_mismatch(const std::string& w) : error("ContextMismatch: " + w) {}
};
struct missing_assignment : error {
    explicit missing_assignment(const std::string& w) : error("MissingAssignment: " + w) {}
};

// Algebra
struct index_out_of_range : error {
    explicit index_out_of_range(const std::string& w) : error("IndexOutOfRange: " + w) {}
};

// Linear algebra
struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& w) : error("DimensionMismatch: " + w) {}
};

// Group realizations
struct bad_spec : error {
    explicit bad_spec(const std::string& w) : error("BadSpec: " + w) {}
};
struct invariant_violation : error {
    explicit invariant_violation(const std::string& w) : error("InvariantViolation: " + w) {}
};
struct not_scalar_multiple : error {
    explicit not_scalar_multiple(const std::string& w) : error("NotScalarMultiple: " + w) {}
};

// Input parsing (CLI, JSON)
struct parse_error : error {
    explicit parse_error(const std::string& w) : error("ParseError: " + w) {}
};

} // namespace cybra

#endif
