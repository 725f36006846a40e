#ifndef PRIMEGALOIS_ERRORS_HPP
#define PRIMEGALOIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace primegalois {

enum class errc {
    zero_polynomial,
    degree_too_small,
    not_squarefree,
    search_exhausted,
    not_prime,
    mixed_conductor,
    not_coprime,
    invalid_parameters,
    not_fixed,
    non_rational_coefficient,
    leading_coefficient_vanishes,
    unsupported_degree,
    inconsistent_evidence,
    non_prime_degree,
    uncertified,
    inconsistent_counts,
    verification_failed,
    parse_error,
    non_univariate,
};

const char* errc_name(errc c) noexcept;

/// Library-level error. `code()` identifies the failure class so callers
/// (CLI, bindings) can map it to exit codes without string matching.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace primegalois

#endif
