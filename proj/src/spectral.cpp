#include "irreg/spectral.hpp"

#include "irreg/errors.hpp"
#include "irreg/measures.hpp"

#include <cmath>
#include <vector>

namespace irreg {

TwoWalkDetection detect_two_walk(const Graph& g) {
  const auto stats = degree_stats(g);
  if (!is_connected(g)) throw PreconditionError("2-walk detection needs a connected graph");
  if (stats.degree_set.size() < 2) {
    throw PreconditionError("2-walk parameters are not unique for regular graphs");
  }
  const int n = g.order();
  std::vector<long long> walk2(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) walk2[u] += g.degree(v);
  }
  int hi = -1, lo = -1;
  for (int u = 0; u < n; ++u) {
    if (hi < 0 && g.degree(u) == stats.max_degree) hi = u;
    if (lo < 0 && g.degree(u) == stats.min_degree) lo = u;
  }
  const Rational a = make_rational(walk2[hi] - walk2[lo], g.degree(hi) - g.degree(lo));
  const Rational b = Rational(walk2[hi]) - a * g.degree(hi);

  TwoWalkDetection out;
  for (int u = 0; u < n; ++u) {
    if (a * g.degree(u) + b != Rational(walk2[u])) {
      out.diagnostic = "vertex " + std::to_string(u) + " breaks the affine relation fitted from vertices " +
                       std::to_string(hi) + " and " + std::to_string(lo);
      return out;
    }
  }
  if (!is_integer(a) || !is_integer(b)) {
    out.diagnostic = "fitted relation has non-integer coefficients a=" + to_string(a) + " b=" + to_string(b);
    return out;
  }
  TwoWalkParams p{numerator_of(a).convert_to<long long>(), numerator_of(b).convert_to<long long>()};
  if (p.a < 0 || p.discriminant() < 0) {
    out.diagnostic = "fitted relation a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                     " admits no real main eigenvalues";
    return out;
  }
  out.params = p;
  return out;
}

std::optional<TwoWalkParams> two_walk_params(const Graph& g) { return detect_two_walk(g).params; }

std::pair<double, double> main_eigenvalues(const TwoWalkParams& p) {
  const long long disc = p.discriminant();
  if (disc < 0) throw NumericError("negative discriminant a^2 + 4b = " + std::to_string(disc));
  const double root = std::sqrt(static_cast<double>(disc));
  return {0.5 * (static_cast<double>(p.a) + root), 0.5 * (static_cast<double>(p.a) - root)};
}

SpectralIdentity variance_spectral_identity(const Graph& g) {
  const auto params = two_walk_params(g);
  if (!params) throw PreconditionError("graph is not 2-walk linear");
  const Rational c = make_rational(2LL * g.size(), g.order());
  SpectralIdentity out;
  // (lambda - c)(c - mu) = c(lambda + mu) - lambda mu - c^2 = c a + b - c^2
  out.var_via_params = c * params->a + params->b - c * c;
  out.matches = out.var_via_params == measure_set(g).var;
  return out;
}

double spectral_radius_estimate(const Graph& g, double rel_tol, int max_iter) {
  if (!is_connected(g)) throw PreconditionError("spectral radius estimate needs a connected graph");
  const int n = g.order();
  if (g.size() == 0) return 0.0;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  // The shift by I makes the Perron root strictly dominant for bipartite graphs too.
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (int v = 0; v < n; ++v) {
      double acc = x[v];
      for (int w : adj[v]) acc += x[w];
      y[v] = acc;
    }
    double rayleigh = 0, norm2 = 0;
    for (int v = 0; v < n; ++v) rayleigh += x[v] * y[v];
    double residual = 0;
    for (int v = 0; v < n; ++v) {
      const double r = y[v] - rayleigh * x[v];
      residual += r * r;
      norm2 += y[v] * y[v];
    }
    if (std::sqrt(residual) <= rel_tol * rayleigh) return rayleigh - 1.0;
    const double norm = std::sqrt(norm2);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  throw NumericError("power iteration did not converge within " + std::to_string(max_iter) + " iterations");
}

}  // namespace irreg
