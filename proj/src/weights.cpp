#include "hardylab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hardylab {

namespace {

constexpr double kPrimeCutoff = 1e-8;
constexpr double kE = 2.718281828459045;

void require_dim(int N) {
    if (N < 2) throw UnsupportedDimension("N must be >= 2, got " + std::to_string(N));
}

} // namespace

WeightSpec WeightSpec::power_xn(double gamma, double beta, int N) {
    require_dim(N);
    if (gamma <= 0.0)
        throw ParameterOutOfRange("PowerXn requires gamma > 0, got gamma=" + std::to_string(gamma));
    if (beta >= N - 1)
        throw ParameterOutOfRange("PowerXn requires beta < N-1 = " + std::to_string(N - 1) +
                                  ", got beta=" + std::to_string(beta));
    return WeightSpec(WeightFamily::PowerXn, gamma, beta, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::shifted_power(double gamma, double eps0, int N) {
    require_dim(N);
    if (gamma <= 0.0)
        throw ParameterOutOfRange("ShiftedPower requires gamma > 0");
    if (eps0 <= 0.0)
        throw ParameterOutOfRange("ShiftedPower requires eps0 > 0");
    return WeightSpec(WeightFamily::ShiftedPower, gamma, eps0, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::shifted_power_over_prime(double gamma, double beta, int N) {
    require_dim(N);
    if (gamma <= 0.0)
        throw ParameterOutOfRange("ShiftedPowerOverPrime requires gamma > 0");
    if (beta >= N - 1)
        throw ParameterOutOfRange("ShiftedPowerOverPrime requires beta < N-1 = " +
                                  std::to_string(N - 1) + ", got beta=" + std::to_string(beta));
    return WeightSpec(WeightFamily::ShiftedPowerOverPrime, gamma, beta, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::log_shift(int N) {
    require_dim(N);
    return WeightSpec(WeightFamily::LogShift, 0.0, 0.0, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::exp(double gamma, int N) {
    require_dim(N);
    if (gamma <= 0.0) throw ParameterOutOfRange("Exp requires gamma > 0");
    return WeightSpec(WeightFamily::Exp, gamma, 0.0, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::exp_neg(double gamma, int N) {
    require_dim(N);
    if (gamma <= 0.0) throw ParameterOutOfRange("ExpNeg requires gamma > 0");
    return WeightSpec(WeightFamily::ExpNeg, gamma, 0.0, N, Monotonicity::Decreasing);
}

WeightSpec WeightSpec::arctan(int N) {
    require_dim(N);
    return WeightSpec(WeightFamily::Arctan, 0.0, 0.0, N, Monotonicity::Increasing);
}

WeightSpec WeightSpec::decreasing_shifted_power(double gamma, double p, int N) {
    require_dim(N);
    if (p <= 1.0) throw ParameterOutOfRange("DecreasingShiftedPower requires p > 1");
    if (gamma >= p - 1.0)
        throw ParameterOutOfRange("DecreasingShiftedPower requires gamma < p-1, got gamma=" +
                                  std::to_string(gamma) + ", p=" + std::to_string(p));
    return WeightSpec(WeightFamily::DecreasingShiftedPower, gamma, p, N, Monotonicity::Decreasing);
}

bool WeightSpec::prime_singular() const {
    return (family_ == WeightFamily::PowerXn || family_ == WeightFamily::ShiftedPowerOverPrime) &&
           b_ > 0.0;
}

bool WeightSpec::xn_derivative_singular() const {
    return family_ == WeightFamily::PowerXn && a_ < 1.0;
}

WeightEval WeightSpec::eval_raw(const Point& x, double p) const {
    const double xn = x.xn();
    switch (family_) {
    case WeightFamily::PowerXn: {
        const double rb = b_ != 0.0 ? std::pow(x.prime_norm(), b_) : 1.0;
        const double W = std::pow(xn, a_) / rb;
        const double Wxn = a_ * std::pow(xn, a_ - 1.0) / rb;
        // W^p / W_xn^{p-1} = gamma^{1-p} x_N^{gamma+p-1} / |x'|^beta
        const double ratio = std::pow(a_, 1.0 - p) * std::pow(xn, a_ + p - 1.0) / rb;
        return {W, Wxn, ratio};
    }
    case WeightFamily::ShiftedPower: {
        const double s = b_ + xn;
        const double W = std::pow(s, a_);
        const double Wxn = a_ * std::pow(s, a_ - 1.0);
        const double ratio = std::pow(a_, 1.0 - p) * std::pow(s, a_ + p - 1.0);
        return {W, Wxn, ratio};
    }
    case WeightFamily::ShiftedPowerOverPrime: {
        const double rb = b_ != 0.0 ? std::pow(x.prime_norm(), b_) : 1.0;
        const double s = 1.0 + xn;
        const double W = std::pow(s, a_) / rb;
        const double Wxn = a_ * std::pow(s, a_ - 1.0) / rb;
        const double ratio = std::pow(a_, 1.0 - p) * std::pow(s, a_ + p - 1.0) / rb;
        return {W, Wxn, ratio};
    }
    case WeightFamily::LogShift: {
        const double s = kE + xn;
        const double W = std::log(s);
        const double Wxn = 1.0 / s;
        const double ratio = std::pow(s, p - 1.0) * std::pow(W, p);
        return {W, Wxn, ratio};
    }
    case WeightFamily::Exp: {
        const double W = std::exp(a_ * xn);
        return {W, a_ * W, std::pow(a_, 1.0 - p) * W};
    }
    case WeightFamily::ExpNeg: {
        const double W = std::exp(-a_ * xn);
        return {W, -a_ * W, std::pow(a_, 1.0 - p) * W};
    }
    case WeightFamily::Arctan: {
        const double W = std::atan(xn);
        const double Wxn = 1.0 / (1.0 + xn * xn);
        const double ratio = std::pow(W, p) * std::pow(1.0 + xn * xn, p - 1.0);
        return {W, Wxn, ratio};
    }
    case WeightFamily::DecreasingShiftedPower: {
        const double s = 1.0 + xn;
        const double theta = a_ - b_ + 1.0; // gamma - p + 1 < 0
        const double W = std::pow(s, theta);
        const double Wxn = theta * std::pow(s, theta - 1.0);
        // W^p / (-W_xn)^{p-1} with (-W_xn) = (p-1-gamma)(1+x_N)^{gamma-p}
        const double ratio =
            std::pow(-theta, 1.0 - p) * std::pow(s, theta * p - (theta - 1.0) * (p - 1.0));
        return {W, Wxn, ratio};
    }
    }
    throw Error("unreachable weight family");
}

WeightEval WeightSpec::eval(const Point& x, double p) const {
    if (prime_singular() && x.prime_norm() < kPrimeCutoff)
        throw SingularPoint("|x'| < 1e-8 with beta > 0 (" + name() + ")");
    if (family_ == WeightFamily::PowerXn) {
        if (x.xn() < 0.0)
            throw SingularPoint("x_N < 0 outside the domain of " + name());
        if (a_ < 1.0 && x.xn() < kPrimeCutoff)
            throw SingularPoint("x_N at the boundary with gamma < 1 (" + name() + ")");
    }
    return eval_raw(x, p);
}

double WeightSpec::value(const Point& x) const {
    switch (family_) {
    case WeightFamily::PowerXn:
        return std::pow(x.xn(), a_) / (b_ != 0.0 ? std::pow(x.prime_norm(), b_) : 1.0);
    case WeightFamily::ShiftedPower:
        return std::pow(b_ + x.xn(), a_);
    case WeightFamily::ShiftedPowerOverPrime:
        return std::pow(1.0 + x.xn(), a_) / (b_ != 0.0 ? std::pow(x.prime_norm(), b_) : 1.0);
    case WeightFamily::LogShift:
        return std::log(kE + x.xn());
    case WeightFamily::Exp:
        return std::exp(a_ * x.xn());
    case WeightFamily::ExpNeg:
        return std::exp(-a_ * x.xn());
    case WeightFamily::Arctan:
        return std::atan(x.xn());
    case WeightFamily::DecreasingShiftedPower:
        return std::pow(1.0 + x.xn(), a_ - b_ + 1.0);
    }
    throw Error("unreachable weight family");
}

Vec WeightSpec::gradient(const Point& x) const {
    Vec g;
    g.dim = x.dim;
    const WeightEval e = eval_raw(x, 2.0);
    g.c[x.dim - 1] = e.W_xn;
    if (prime_singular()) {
        // d/dx_i of |x'|^{-beta} factor: -beta W x_i / |x'|^2
        const double r2 = x.prime_norm2();
        for (int i = 0; i + 1 < x.dim; ++i) g.c[i] = -b_ * e.W * x.c[i] / r2;
    }
    return g;
}

std::string WeightSpec::name() const {
    std::ostringstream os;
    switch (family_) {
    case WeightFamily::PowerXn: os << "power(gamma=" << a_ << ",beta=" << b_ << ")"; break;
    case WeightFamily::ShiftedPower: os << "shifted_power(gamma=" << a_ << ",eps0=" << b_ << ")"; break;
    case WeightFamily::ShiftedPowerOverPrime:
        os << "shifted_power_prime(gamma=" << a_ << ",beta=" << b_ << ")";
        break;
    case WeightFamily::LogShift: os << "log_shift"; break;
    case WeightFamily::Exp: os << "exp(gamma=" << a_ << ")"; break;
    case WeightFamily::ExpNeg: os << "exp_neg(gamma=" << a_ << ")"; break;
    case WeightFamily::Arctan: os << "arctan"; break;
    case WeightFamily::DecreasingShiftedPower:
        os << "decreasing_shifted_power(gamma=" << a_ << ",p=" << b_ << ")";
        break;
    }
    return os.str();
}

ConditionReport check_conditions(const WeightSpec& spec, double p, std::span<const Point> grid) {
    if (grid.empty()) throw EmptyGrid("check_conditions needs at least one grid point");

    ConditionReport rep;
    bool any_pos = false, any_neg = false;
    bool w_finite = true;
    double ratio_inf = std::numeric_limits<double>::infinity();
    double chuva_sup = 0.0;
    bool chuva_finite = true;

    for (const Point& x : grid) {
        const WeightEval e = spec.eval(x, p);
        if (!std::isfinite(e.W) || e.W < 0.0 || !std::isfinite(e.W_xn)) w_finite = false;
        if (e.W_xn > 0.0) any_pos = true;
        if (e.W_xn < 0.0) any_neg = true;
        ratio_inf = std::min(ratio_inf, e.hardy_ratio);

        const Vec g = spec.gradient(x);
        const double gn = g.norm();
        const double dxn = std::fabs(e.W_xn);
        if (dxn < 1e-300) {
            chuva_finite = false;
        } else {
            chuva_sup = std::max(chuva_sup, gn / dxn);
        }
    }

    rep.w1_sign = any_pos && any_neg ? W1Sign::Mixed
                : any_pos            ? W1Sign::Positive
                                     : W1Sign::Negative;
    // (W_0) spot-check: nonnegative finite values on the grid, plus the
    // parameter-level integrability of the singular factors.
    bool param_ok = true;
    if (spec.prime_singular() && spec.param_b() >= spec.dim() - 1) param_ok = false;
    rep.w0_ok = w_finite && param_ok;

    if (std::isfinite(ratio_inf) && ratio_inf > 0.0) rep.w2_constant = ratio_inf;
    if (chuva_finite && std::isfinite(chuva_sup)) rep.chuva_constant = chuva_sup;

    std::ostringstream os;
    os << grid.size() << " points, N=" << spec.dim() << ", p=" << p << ", " << spec.name();
    rep.grid_descriptor = os.str();
    return rep;
}

} // namespace hardylab
