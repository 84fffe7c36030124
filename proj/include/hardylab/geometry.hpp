#pragma once

#include <optional>
#include <string>

#include "hardylab/point.hpp"

namespace hardylab {

enum class PsiFamily {
    Zero,               // psi = offset
    ScaledSine,         // psi = offset + a sin(k x'_1)
    Paraboloid,         // psi = offset + a |x'|^2
    PiecewiseLinearCone // psi = offset + a |x'_1|   (Lipschitz, not C^1 at 0)
};

enum class TransformDirection { Flatten, Unflatten };

// Epigraph domain Omega = { x : x_N > psi(x') }.
class GraphDomain {
public:
    static GraphDomain zero(int N, double offset = 0.0);
    static GraphDomain scaled_sine(double a, double k, int N, double offset = 0.0);
    static GraphDomain paraboloid(double a, int N, double offset = 0.0);
    static GraphDomain cone(double a, int N, double offset = 0.0);

    double psi(const Point& xp) const;
    Vec grad_psi(const Point& xp) const;       // throws NotDifferentiable (cone at x'_1 = 0)
    double surface_factor(const Point& xp) const; // sqrt(1 + |grad psi|^2)
    Point transform(const Point& x, TransformDirection dir) const;

    std::optional<double> lipschitz_bound() const;
    bool is_flat() const { return family_ == PsiFamily::Zero; }
    bool is_half_space() const { return family_ == PsiFamily::Zero && offset_ == 0.0; }
    bool smooth() const { return family_ != PsiFamily::PiecewiseLinearCone; }
    PsiFamily family() const { return family_; }
    int dim() const { return dim_; }
    double offset() const { return offset_; }
    std::string name() const;

private:
    GraphDomain(PsiFamily f, double a, double k, double offset, int N)
        : family_(f), a_(a), k_(k), offset_(offset), dim_(N) {}

    PsiFamily family_;
    double a_;
    double k_;
    double offset_;
    int dim_;
};

// Omega_1 (subgraph of psi1) united with Omega_2 (supergraph of psi2),
// psi1 < psi2 everywhere.
class TwoGraphDomain {
public:
    const GraphDomain& psi1() const { return psi1_; }
    const GraphDomain& psi2() const { return psi2_; }
    int dim() const { return psi1_.dim(); }

    friend TwoGraphDomain make_two_graph(const GraphDomain& psi1, const GraphDomain& psi2, int N,
                                         const std::optional<Box>& validation_box);

private:
    TwoGraphDomain(GraphDomain p1, GraphDomain p2) : psi1_(p1), psi2_(p2) {}
    GraphDomain psi1_;
    GraphDomain psi2_;
};

// Validates the strict gap psi1 < psi2 on 10^4 quasi-random points of the
// validation box (default [-8,8]^{N-1}); throws GraphsCross on failure.
TwoGraphDomain make_two_graph(const GraphDomain& psi1, const GraphDomain& psi2, int N,
                              const std::optional<Box>& validation_box = std::nullopt);

} // namespace hardylab
