#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree extrema requested for the zero polynomial.
struct zero_polynomial_error : error {
  zero_polynomial_error() : error("degree extrema are undefined for the zero polynomial") {}
};

// Operands have different sizes or levels.
struct size_mismatch_error : error {
  using error::error;
};

// A node is neither contained in nor addable to the given shape.
struct invalid_node_error : error {
  using error::error;
};

// Input violates the standing assumption e = 0 or e >= n, or an operation
// is outside its validated regime (e.g. Kleshchev detection for e > 0).
struct unsupported_error : error {
  using error::error;
};

// A root vector with odd norm (β,β); cannot arise from a multipartition content.
struct odd_norm_error : error {
  using error::error;
};

struct not_level_two_error : error {
  using error::error;
};

// More than one tableau in Std^μ(λ) at level two; contradicts the closed formula.
struct non_unique_tableau_error : error {
  using error::error;
};

// Straightening produced a negative coefficient or a final column outside
// δ + q·N[q] (resp. δ + q⁻¹·N[q⁻¹]); the input is outside the validated regime.
struct positivity_violation_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

}  // namespace qschur
