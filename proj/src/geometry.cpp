#include "hardylab/geometry.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

namespace {
void require_dim(int N) {
    if (N < 2) throw UnsupportedDimension("N must be >= 2, got " + std::to_string(N));
}
} // namespace

GraphDomain GraphDomain::zero(int N, double offset) {
    require_dim(N);
    return GraphDomain(PsiFamily::Zero, 0.0, 0.0, offset, N);
}

GraphDomain GraphDomain::scaled_sine(double a, double k, int N, double offset) {
    require_dim(N);
    return GraphDomain(PsiFamily::ScaledSine, a, k, offset, N);
}

GraphDomain GraphDomain::paraboloid(double a, int N, double offset) {
    require_dim(N);
    return GraphDomain(PsiFamily::Paraboloid, a, 0.0, offset, N);
}

GraphDomain GraphDomain::cone(double a, int N, double offset) {
    require_dim(N);
    return GraphDomain(PsiFamily::PiecewiseLinearCone, a, 0.0, offset, N);
}

double GraphDomain::psi(const Point& xp) const {
    switch (family_) {
    case PsiFamily::Zero: return offset_;
    case PsiFamily::ScaledSine: return offset_ + a_ * std::sin(k_ * xp.c[0]);
    case PsiFamily::Paraboloid: return offset_ + a_ * xp.norm2();
    case PsiFamily::PiecewiseLinearCone: return offset_ + a_ * std::fabs(xp.c[0]);
    }
    throw Error("unreachable psi family");
}

Vec GraphDomain::grad_psi(const Point& xp) const {
    Vec g;
    g.dim = xp.dim;
    switch (family_) {
    case PsiFamily::Zero:
        return g;
    case PsiFamily::ScaledSine:
        g.c[0] = a_ * k_ * std::cos(k_ * xp.c[0]);
        return g;
    case PsiFamily::Paraboloid:
        for (int i = 0; i < xp.dim; ++i) g.c[i] = 2.0 * a_ * xp.c[i];
        return g;
    case PsiFamily::PiecewiseLinearCone:
        if (xp.c[0] == 0.0)
            throw NotDifferentiable("cone graph has no gradient at x'_1 = 0");
        g.c[0] = xp.c[0] > 0.0 ? a_ : -a_;
        return g;
    }
    throw Error("unreachable psi family");
}

double GraphDomain::surface_factor(const Point& xp) const {
    const Vec g = grad_psi(xp);
    return std::sqrt(1.0 + g.norm2());
}

Point GraphDomain::transform(const Point& x, TransformDirection dir) const {
    Point y = x;
    const double shift = psi(x.prime());
    y.set_xn(dir == TransformDirection::Flatten ? x.xn() - shift : x.xn() + shift);
    return y;
}

std::optional<double> GraphDomain::lipschitz_bound() const {
    switch (family_) {
    case PsiFamily::Zero: return 0.0;
    case PsiFamily::ScaledSine: return std::fabs(a_ * k_);
    case PsiFamily::Paraboloid: return std::nullopt; // gradient unbounded
    case PsiFamily::PiecewiseLinearCone: return std::fabs(a_);
    }
    return std::nullopt;
}

std::string GraphDomain::name() const {
    std::ostringstream os;
    switch (family_) {
    case PsiFamily::Zero: os << "zero"; break;
    case PsiFamily::ScaledSine: os << "sine(a=" << a_ << ",k=" << k_ << ")"; break;
    case PsiFamily::Paraboloid: os << "paraboloid(a=" << a_ << ")"; break;
    case PsiFamily::PiecewiseLinearCone: os << "cone(a=" << a_ << ")"; break;
    }
    if (offset_ != 0.0) os << "+" << offset_;
    return os.str();
}

TwoGraphDomain make_two_graph(const GraphDomain& psi1, const GraphDomain& psi2, int N,
                              const std::optional<Box>& validation_box) {
    require_dim(N);
    if (psi1.dim() != N || psi2.dim() != N)
        throw BadParameters("two-graph components must share the dimension N");

    Box vb;
    if (validation_box) {
        vb = *validation_box;
    } else {
        vb.dim = N - 1;
        for (int i = 0; i < N - 1; ++i) { vb.lo[i] = -8.0; vb.hi[i] = 8.0; }
    }

    Rng rng(0x2c1b3c5dULL);
    for (int it = 0; it < 10000; ++it) {
        Point xp;
        xp.dim = N - 1;
        for (int i = 0; i < N - 1; ++i) xp.c[i] = rng.uniform(vb.lo[i], vb.hi[i]);
        const double a = psi1.psi(xp), b = psi2.psi(xp);
        if (!(a < b)) {
            std::ostringstream os;
            os << "psi1 >= psi2 at x'=(" << xp.c[0];
            if (N - 1 > 1) os << "," << xp.c[1];
            os << "): " << a << " vs " << b;
            throw GraphsCross(os.str());
        }
    }
    return TwoGraphDomain(psi1, psi2);
}

} // namespace hardylab
