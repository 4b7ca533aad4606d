#pragma once

#include "irreg/graph.hpp"
#include "irreg/rational.hpp"

#include <optional>
#include <string>
#include <utility>

namespace irreg {

/// Parameters of a 2-walk (a, b)-linear graph: every vertex u satisfies
/// sum of neighbour degrees = a * deg(u) + b.
struct TwoWalkParams {
  long long a = 0;
  long long b = 0;

  long long discriminant() const { return a * a + 4 * b; }
  friend bool operator==(const TwoWalkParams&, const TwoWalkParams&) = default;
};

struct TwoWalkDetection {
  std::optional<TwoWalkParams> params;
  std::string diagnostic;  // why detection failed, empty on success
};

/// Requires a connected irregular graph; throws PreconditionError otherwise.
TwoWalkDetection detect_two_walk(const Graph& g);
std::optional<TwoWalkParams> two_walk_params(const Graph& g);

/// (lambda, mu) with lambda >= mu. Throws NumericError for a negative discriminant.
std::pair<double, double> main_eigenvalues(const TwoWalkParams& p);

struct SpectralIdentity {
  Rational var_via_params;  // c*a + b - c^2 with c = 2m/n
  bool matches = false;
};

/// Requires a 2-walk linear graph; throws PreconditionError otherwise.
SpectralIdentity variance_spectral_identity(const Graph& g);

/// Dominant adjacency eigenvalue by power iteration on A + I.
/// Throws PreconditionError for disconnected graphs and NumericError when the
/// relative residual does not drop below `rel_tol` within `max_iter` steps.
double spectral_radius_estimate(const Graph& g, double rel_tol = 1e-9, int max_iter = 100000);

}  // namespace irreg
