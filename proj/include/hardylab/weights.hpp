#pragma once

#include <optional>
#include <span>
#include <string>

#include "hardylab/point.hpp"

namespace hardylab {

enum class Monotonicity { Increasing, Decreasing };
enum class W1Sign { Positive, Negative, Mixed };

enum class WeightFamily {
    PowerXn,                // x_N^gamma / |x'|^beta            (gamma>0, beta<N-1)
    ShiftedPower,           // (eps0 + x_N)^gamma               (gamma>0, eps0>0)
    ShiftedPowerOverPrime,  // (1+x_N)^gamma / |x'|^beta        (gamma>0, beta<N-1)
    LogShift,               // log(e + x_N)
    Exp,                    // e^{gamma x_N}                    (gamma>0)
    ExpNeg,                 // e^{-gamma x_N}                   (gamma>0, decreasing)
    Arctan,                 // arctan(x_N)
    DecreasingShiftedPower, // (1+x_N)^{gamma-p+1}              (gamma<p-1, decreasing)
};

struct WeightEval {
    double W;           // weight value, >= 0
    double W_xn;        // dW/dx_N
    double hardy_ratio; // W^p / |W_xn|^{p-1}, sign per monotonicity class
};

// An exactly evaluable weight family: closed-form value, x_N-derivative,
// full gradient and Hardy ratio. Immutable after construction.
class WeightSpec {
public:
    static WeightSpec power_xn(double gamma, double beta, int N);
    static WeightSpec shifted_power(double gamma, double eps0, int N);
    static WeightSpec shifted_power_over_prime(double gamma, double beta, int N);
    static WeightSpec log_shift(int N);
    static WeightSpec exp(double gamma, int N);
    static WeightSpec exp_neg(double gamma, int N);
    static WeightSpec arctan(int N);
    static WeightSpec decreasing_shifted_power(double gamma, double p, int N);

    // Strict evaluator: rejects singular points (|x'| < 1e-8 for beta>0
    // families; x_N at the weight's own singular set for PowerXn, gamma<1).
    WeightEval eval(const Point& x, double p) const;

    // Same closed forms without the singular-point cutoff. Quadrature and
    // sampling paths use this; nodes never land exactly on the singular set.
    WeightEval eval_raw(const Point& x, double p) const;

    double value(const Point& x) const;     // W only; defined up to the boundary
    Vec gradient(const Point& x) const;     // full nabla W (for the |grad W| <= c|W_xn| check)

    Monotonicity monotonicity() const { return mono_; }
    WeightFamily family() const { return family_; }
    int dim() const { return dim_; }
    double param_a() const { return a_; } // gamma (or the family's first parameter)
    double param_b() const { return b_; } // beta / eps0 / p, per family
    bool prime_singular() const;          // carries a |x'|^{-beta} factor
    bool xn_derivative_singular() const;  // W_xn blows up at x_N = 0
    std::string name() const;

private:
    WeightSpec(WeightFamily f, double a, double b, int N, Monotonicity m)
        : family_(f), a_(a), b_(b), dim_(N), mono_(m) {}

    WeightFamily family_;
    double a_;
    double b_;
    int dim_;
    Monotonicity mono_;
};

struct ConditionReport {
    bool w0_ok = false;                     // local integrability spot-check
    W1Sign w1_sign = W1Sign::Mixed;
    std::optional<double> w2_constant;      // grid infimum of the Hardy ratio, if positive
    std::optional<double> chuva_constant;   // grid supremum of |grad W| / |W_xn|, if finite
    std::string grid_descriptor;
};

ConditionReport check_conditions(const WeightSpec& spec, double p, std::span<const Point> grid);

} // namespace hardylab
