#pragma once

#include <cstdint>
#include <functional>

#include "hardylab/geometry.hpp"
#include "hardylab/point.hpp"

namespace hardylab {

enum class SingularHandling {
    None,
    GradedTowardBoundary, // substitution x_N = psi(x') + t^2 at the graph end
    PolarInXPrime,        // radial treatment of |x'|^{-beta} factors around x' = 0
    GradedAndPolar        // both devices at once
};

enum class GraphSide { Above, Below }; // epigraph vs subgraph

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long cells_used = 0;
    SingularHandling singular_handling = SingularHandling::None;
};

using Integrand = std::function<double(const Point&)>;

inline constexpr long kDefaultMaxCells = 2'000'000;

// Adaptive integral of f over (Omega side of the graph) intersected with box.
// Contract: |value - true| <= max(tol*|value|, tol) for the supported
// integrand classes (smooth away from the graph / the x'=0 axis, singular
// parts declared via hint).
IntegralResult integrate_interior(const Integrand& f, const GraphDomain& domain, const Box& box,
                                  double tol, SingularHandling hint = SingularHandling::None,
                                  GraphSide side = GraphSide::Above,
                                  long max_cells = kDefaultMaxCells);

// Integral of f(x') over the boundary graph patch determined by box,
// multiplied by sqrt(1+|grad psi|^2) iff with_surface_factor. box may be the
// full N-dim support box (its prime projection is used) or an (N-1)-dim box.
IntegralResult integrate_boundary(const Integrand& f, const GraphDomain& domain, const Box& box,
                                  double tol, bool with_surface_factor,
                                  SingularHandling hint = SingularHandling::None,
                                  long max_cells = kDefaultMaxCells);

// Integral of f over {x : x_N - psi(x') > eps} within box, at fixed internal
// tolerance 1e-8 (divergence scans probe eps -> 0 through this).
double integrate_truncated(const Integrand& f, const GraphDomain& domain, const Box& box,
                           double eps, long max_cells = kDefaultMaxCells);

struct McResult {
    double value = 0.0;
    double std_error = 0.0;
    long n = 0;
};

// Uniform-sampling Monte Carlo over box, optionally clipped to one side of
// the graph. Deterministic for a given seed; the independent cross-check for
// every adaptive result.
McResult mc_oracle(const Integrand& f, const Box& box, long n, std::uint64_t seed,
                   const GraphDomain* clip = nullptr, GraphSide side = GraphSide::Above);

} // namespace hardylab
