#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hardylab/inequalities.hpp"

namespace hardylab {

enum class TrialConstraint { None, VanishAtBoundary };

// Rayleigh-quotient minimization over the coefficients of a separable spline
// trial. reduce_to_1d collapses the problem to the x_N profile on (0, L)
// (the 1D core of every W = W(x_N) inequality); otherwise the full
// evaluate_case ratio is minimized.
struct RayleighProblem {
    InequalityCase ineq;
    std::optional<WeightSpec> weight;
    std::optional<GraphDomain> domain;
    double p = 2.0;
    std::vector<double> knots;
    std::vector<double> initial_coeffs;
    double cutoff_radius = 2.0;
    int dim = 2;
    TrialConstraint constraint = TrialConstraint::None;
    bool reduce_to_1d = false;
    double tol = 1e-7;

    // Dirichlet spline trials for the classical Hardy quotient
    // int |u'|^p / int |u|^p t^{-p} on (0, L); n_coeffs + 4 knots, geometric
    // toward 0 so the profile can track t^{(p-1)/p} across many scales.
    static RayleighProblem classical_hardy_1d(double p, double L = 50.0, int n_coeffs = 14);
};

struct OptResult {
    double best_ratio = 0.0;
    std::vector<double> best_coeffs;
    long evaluations = 0;
    std::vector<double> history; // nonincreasing incumbents
};

OptResult minimize_ratio(const RayleighProblem& problem, long budget, std::uint64_t seed);

// Direct evaluation of the problem's ratio at a coefficient vector (the
// optimizer-soundness re-check).
double rayleigh_ratio(const RayleighProblem& problem, std::span<const double> coeffs);

// p = 2 reduction: smallest generalized eigenvalue of
//   int V_right u'^2  =  lambda  int V_left u^2   on (0, L),
// P1 elements, Dirichlet at L, bc at 0 as requested. The mesh is power-graded
// toward 0 when V_left is singular there; convergence is second order in 1/M
// for smooth pairs.
struct Weight1D {
    std::function<double(double)> v_left;
    std::function<double(double)> v_right;
};

enum class Bc0 { DirichletAtZero, Free };

struct EigResult {
    double lambda_min = 0.0;
    std::vector<double> eigvector;
    std::vector<double> nodes;
};

EigResult eig_best_constant_1d(const Weight1D& w, Bc0 bc, double L, int M);

// Empirical (A, B) feasibility frontier of the two-constant form of the
// decreasing-weight inequality: for each A, the supremum over the trial
// suite of (LHS - A*gradient)/boundary, clamped at 0.
struct ParetoPoint {
    double A = 0.0;
    double B_min = 0.0;
    bool unbounded = false;
};

std::vector<ParetoPoint> ab_pareto(const InequalityCase& c, const WeightSpec& W,
                                   const GraphDomain& domain, std::span<const double> A_grid,
                                   std::span<const TestFunction> suite, double p, double tol);

} // namespace hardylab
