#pragma once

#include <variant>
#include <vector>

#include "hardylab/point.hpp"

namespace hardylab {

// Compactly supported C^2-or-better profile: sum of cubic B-spline basis
// elements over the knot quintuples (t_i..t_{i+4}). Vanishes with two
// derivatives outside [knots.front(), knots.back()]; linear in the
// coefficients. coeffs.size() == knots.size() - 4.
class SplineProfile {
public:
    SplineProfile(std::vector<double> knots, std::vector<double> coeffs);

    double value(double t) const;
    double deriv(double t) const;
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    // Greville-style representative abscissa of basis element i.
    double greville(std::size_t i) const;

private:
    std::vector<double> knots_;
    std::vector<double> coeffs_;
};

struct TestFnEval {
    double value;
    Vec gradient;
};

class TestFunction {
public:
    // exp(1 - 1/(1 - |x-c|^2/R^2)) inside the ball, 0 outside; max value 1.
    static TestFunction radial_bump(const Point& center, double R);
    // product of 1D bumps with per-axis radii
    static TestFunction product_bump(const Point& center, const std::vector<double>& radii);
    // 1 on |x-c| <= r_inner, 0 beyond r_outer, C^3 septic taper between
    static TestFunction plateau(double r_inner, double r_outer, const Point& center);
    // spline profile in x_N times a fixed C^3 cutoff in |x'| (radius R_cut)
    static TestFunction separable_trial(std::vector<double> coeffs, std::vector<double> knots,
                                        double cutoff_radius, int N);

    double value(const Point& x) const;
    Vec gradient(const Point& x) const;
    TestFnEval eval(const Point& x) const { return {value(x), gradient(x)}; }

    const Box& support_box() const { return support_; }
    int dim() const { return support_.dim; }

    // SeparableTrial only: the same trial with new coefficients.
    TestFunction with_coeffs(std::vector<double> coeffs) const;
    const SplineProfile& profile() const; // SeparableTrial only

private:
    struct RadialBumpFn {
        Point center;
        double R;
    };
    struct ProductBumpFn {
        Point center;
        std::vector<double> radii;
    };
    struct PlateauFn {
        Point center;
        double r_in, r_out;
    };
    struct SeparableTrialFn {
        SplineProfile profile;
        double cutoff_radius;
    };
    using Impl = std::variant<RadialBumpFn, ProductBumpFn, PlateauFn, SeparableTrialFn>;

    TestFunction(Impl impl, Box support) : impl_(std::move(impl)), support_(support) {}

    Impl impl_;
    Box support_;
};

} // namespace hardylab
