#pragma once

#include <stdexcept>
#include <string>

namespace livlab {

enum class ErrorKind {
    invalid_input,
    not_anosov,
    search_radius_exhausted,
    budget_exceeded,
    bound_exceeded,
    non_convergence,
    invalid_base,
    invalid_rates,
    dimension_mismatch,
    singular_system,
    grid_degenerate,
    domain_exhausted,
    degenerate_samples,
    graph_transform_undefined,
    parse_error,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

const char* error_kind_name(ErrorKind kind);

}  // namespace livlab
