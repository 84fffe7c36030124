#include "hardylab/testfn.hpp"

#include <cmath>

namespace hardylab {

namespace {

// 1D mollifier profile b(t) = exp(1 - 1/(1-t^2)) on |t|<1, with b'(t)/b(t)
// = -2t/(1-t^2)^2. Returns {b, b'}.
inline std::pair<double, double> bump1d(double t) {
    const double t2 = t * t;
    if (t2 >= 1.0 - 1e-14) return {0.0, 0.0};
    const double om = 1.0 - t2;
    const double b = std::exp(1.0 - 1.0 / om);
    return {b, b * (-2.0 * t / (om * om))};
}

// C^3 smoothstep: s(0)=0, s(1)=1, zero first three derivatives at both ends.
inline double sm7(double t) {
    const double t3 = t * t * t;
    return t3 * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
}
inline double sm7_deriv(double t) {
    const double omt = 1.0 - t;
    const double a = t * omt;
    return 140.0 * a * a * a;
}

} // namespace

SplineProfile::SplineProfile(std::vector<double> knots, std::vector<double> coeffs)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)) {
    if (knots_.size() < 5) throw BadParameters("spline profile needs at least 5 knots");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i] > knots_[i - 1]))
            throw BadParameters("spline knots must be strictly increasing");
    if (coeffs_.size() != knots_.size() - 4)
        throw BadParameters("spline profile needs knots.size()-4 coefficients");
}

double SplineProfile::greville(std::size_t i) const {
    return (knots_[i + 1] + knots_[i + 2] + knots_[i + 3]) / 3.0;
}

namespace {

// Cubic B-spline basis element over the five knots u[0..4]; returns value and
// derivative at x (Cox-de Boor triangle, degree 3).
inline std::pair<double, double> bspline_elem(const double* u, double x) {
    if (x < u[0] || x >= u[4]) return {0.0, 0.0};
    double b0[4]; // degree-0
    for (int i = 0; i < 4; ++i) b0[i] = (x >= u[i] && x < u[i + 1]) ? 1.0 : 0.0;
    double b1[3];
    for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        if (b0[i] != 0.0) v += (x - u[i]) / (u[i + 1] - u[i]) * b0[i];
        if (b0[i + 1] != 0.0) v += (u[i + 2] - x) / (u[i + 2] - u[i + 1]) * b0[i + 1];
        b1[i] = v;
    }
    double b2[2];
    for (int i = 0; i < 2; ++i) {
        double v = 0.0;
        if (b1[i] != 0.0) v += (x - u[i]) / (u[i + 2] - u[i]) * b1[i];
        if (b1[i + 1] != 0.0) v += (u[i + 3] - x) / (u[i + 3] - u[i + 1]) * b1[i + 1];
        b2[i] = v;
    }
    double val = 0.0;
    if (b2[0] != 0.0) val += (x - u[0]) / (u[3] - u[0]) * b2[0];
    if (b2[1] != 0.0) val += (u[4] - x) / (u[4] - u[1]) * b2[1];
    const double der = 3.0 * (b2[0] / (u[3] - u[0]) - b2[1] / (u[4] - u[1]));
    return {val, der};
}

} // namespace

double SplineProfile::value(double t) const {
    if (t < knots_.front() || t >= knots_.back()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (t < knots_[i] || t >= knots_[i + 4]) continue;
        s += coeffs_[i] * bspline_elem(&knots_[i], t).first;
    }
    return s;
}

double SplineProfile::deriv(double t) const {
    if (t < knots_.front() || t >= knots_.back()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (t < knots_[i] || t >= knots_[i + 4]) continue;
        s += coeffs_[i] * bspline_elem(&knots_[i], t).second;
    }
    return s;
}

TestFunction TestFunction::radial_bump(const Point& center, double R) {
    if (R <= 0.0) throw BadParameters("radial bump needs R > 0");
    Box b;
    b.dim = center.dim;
    for (int i = 0; i < b.dim; ++i) { b.lo[i] = center.c[i] - R; b.hi[i] = center.c[i] + R; }
    return TestFunction(RadialBumpFn{center, R}, b);
}

TestFunction TestFunction::product_bump(const Point& center, const std::vector<double>& radii) {
    if (static_cast<int>(radii.size()) != center.dim)
        throw BadParameters("product bump needs one radius per axis");
    for (double r : radii)
        if (r <= 0.0) throw BadParameters("product bump radii must be positive");
    Box b;
    b.dim = center.dim;
    for (int i = 0; i < b.dim; ++i) {
        b.lo[i] = center.c[i] - radii[i];
        b.hi[i] = center.c[i] + radii[i];
    }
    return TestFunction(ProductBumpFn{center, radii}, b);
}

TestFunction TestFunction::plateau(double r_inner, double r_outer, const Point& center) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw BadParameters("plateau needs 0 < r_inner < r_outer");
    Box b;
    b.dim = center.dim;
    for (int i = 0; i < b.dim; ++i) {
        b.lo[i] = center.c[i] - r_outer;
        b.hi[i] = center.c[i] + r_outer;
    }
    return TestFunction(PlateauFn{center, r_inner, r_outer}, b);
}

TestFunction TestFunction::separable_trial(std::vector<double> coeffs, std::vector<double> knots,
                                           double cutoff_radius, int N) {
    if (N < 2) throw BadParameters("separable trial needs N >= 2");
    if (cutoff_radius <= 0.0) throw BadParameters("separable trial needs cutoff_radius > 0");
    SplineProfile prof(std::move(knots), std::move(coeffs));
    Box b;
    b.dim = N;
    for (int i = 0; i + 1 < N; ++i) { b.lo[i] = -cutoff_radius; b.hi[i] = cutoff_radius; }
    b.lo[N - 1] = prof.knots().front();
    b.hi[N - 1] = prof.knots().back();
    return TestFunction(SeparableTrialFn{std::move(prof), cutoff_radius}, b);
}

TestFunction TestFunction::with_coeffs(std::vector<double> coeffs) const {
    const auto* st = std::get_if<SeparableTrialFn>(&impl_);
    if (!st) throw BadParameters("with_coeffs applies to separable trials only");
    return separable_trial(std::move(coeffs), st->profile.knots(), st->cutoff_radius, dim());
}

const SplineProfile& TestFunction::profile() const {
    const auto* st = std::get_if<SeparableTrialFn>(&impl_);
    if (!st) throw BadParameters("profile() applies to separable trials only");
    return st->profile;
}

namespace {

// cutoff in |x'|: 1 on r <= 0.6 R, 0 beyond R, C^3 in between
inline std::pair<double, double> cutoff_fn(double r, double R) {
    const double r0 = 0.6 * R;
    if (r <= r0) return {1.0, 0.0};
    if (r >= R) return {0.0, 0.0};
    const double tau = (r - r0) / (R - r0);
    return {1.0 - sm7(tau), -sm7_deriv(tau) / (R - r0)};
}

} // namespace

double TestFunction::value(const Point& x) const {
    return std::visit(
        [&](const auto& fn) -> double {
            using T = std::decay_t<decltype(fn)>;
            if constexpr (std::is_same_v<T, RadialBumpFn>) {
                const double t = (x - fn.center).norm() / fn.R;
                return bump1d(t).first;
            } else if constexpr (std::is_same_v<T, ProductBumpFn>) {
                double v = 1.0;
                for (int i = 0; i < x.dim; ++i) {
                    v *= bump1d((x.c[i] - fn.center.c[i]) / fn.radii[i]).first;
                    if (v == 0.0) return 0.0;
                }
                return v;
            } else if constexpr (std::is_same_v<T, PlateauFn>) {
                const double r = (x - fn.center).norm();
                if (r <= fn.r_in) return 1.0;
                if (r >= fn.r_out) return 0.0;
                return 1.0 - sm7((r - fn.r_in) / (fn.r_out - fn.r_in));
            } else {
                const double cut = cutoff_fn(x.prime_norm(), fn.cutoff_radius).first;
                if (cut == 0.0) return 0.0;
                return fn.profile.value(x.xn()) * cut;
            }
        },
        impl_);
}

Vec TestFunction::gradient(const Point& x) const {
    return std::visit(
        [&](const auto& fn) -> Vec {
            using T = std::decay_t<decltype(fn)>;
            Vec g;
            g.dim = x.dim;
            if constexpr (std::is_same_v<T, RadialBumpFn>) {
                const Point d = x - fn.center;
                const double s = d.norm();
                const double t = s / fn.R;
                const double t2 = t * t;
                if (t2 >= 1.0 - 1e-14) return g;
                const double om = 1.0 - t2;
                const double u = std::exp(1.0 - 1.0 / om);
                const double f = -2.0 * u / (fn.R * fn.R * om * om);
                for (int i = 0; i < x.dim; ++i) g.c[i] = f * d.c[i];
                return g;
            } else if constexpr (std::is_same_v<T, ProductBumpFn>) {
                double vals[3], logd[3];
                for (int i = 0; i < x.dim; ++i) {
                    const double t = (x.c[i] - fn.center.c[i]) / fn.radii[i];
                    auto [b, db] = bump1d(t);
                    if (b == 0.0) return g;
                    vals[i] = b;
                    logd[i] = db / (b * fn.radii[i]);
                }
                double prod = 1.0;
                for (int i = 0; i < x.dim; ++i) prod *= vals[i];
                for (int i = 0; i < x.dim; ++i) g.c[i] = prod * logd[i];
                return g;
            } else if constexpr (std::is_same_v<T, PlateauFn>) {
                const Point d = x - fn.center;
                const double r = d.norm();
                if (r <= fn.r_in || r >= fn.r_out || r < 1e-300) return g;
                const double w = fn.r_out - fn.r_in;
                const double dv = -sm7_deriv((r - fn.r_in) / w) / w;
                for (int i = 0; i < x.dim; ++i) g.c[i] = dv * d.c[i] / r;
                return g;
            } else {
                const double r = x.prime_norm();
                auto [cut, dcut] = cutoff_fn(r, fn.cutoff_radius);
                if (cut == 0.0) return g;
                const double pv = fn.profile.value(x.xn());
                g.c[x.dim - 1] = fn.profile.deriv(x.xn()) * cut;
                if (dcut != 0.0 && r > 1e-300) {
                    for (int i = 0; i + 1 < x.dim; ++i) g.c[i] = pv * dcut * x.c[i] / r;
                }
                return g;
            }
        },
        impl_);
}

} // namespace hardylab
