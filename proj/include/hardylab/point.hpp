#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "hardylab/errors.hpp"

namespace hardylab {

// Points live in R^N with N in {2,3}. Coordinates are split as x = (x', x_N):
// x' = c[0..dim-2] and x_N = c[dim-1]. Prime points (arguments of psi and of
// boundary integrands) reuse the same type with dim = N-1.
struct Point {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    int dim = 3;

    double xn() const { return c[dim - 1]; }
    void set_xn(double v) { c[dim - 1] = v; }

    double prime_norm2() const {
        double s = 0.0;
        for (int i = 0; i + 1 < dim; ++i) s += c[i] * c[i];
        return s;
    }
    double prime_norm() const { return std::sqrt(prime_norm2()); }

    double norm2() const {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += c[i] * c[i];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    Point prime() const {
        Point p;
        p.dim = dim - 1;
        for (int i = 0; i + 1 < dim; ++i) p.c[i] = c[i];
        return p;
    }

    // Lift a prime point to R^N by appending x_N.
    static Point lift(const Point& xp, double xn) {
        Point p;
        p.dim = xp.dim + 1;
        for (int i = 0; i < xp.dim; ++i) p.c[i] = xp.c[i];
        p.c[p.dim - 1] = xn;
        return p;
    }

    static Point make2(double x1, double xn) { return Point{{x1, xn, 0.0}, 2}; }
    static Point make3(double x1, double x2, double xn) { return Point{{x1, x2, xn}, 3}; }
    static Point make1(double x1) { return Point{{x1, 0.0, 0.0}, 1}; }
};

using Vec = Point; // gradients

inline Point operator-(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < a.dim; ++i) r.c[i] -= b.c[i];
    return r;
}

// Axis-aligned box in R^dim.
struct Box {
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{0.0, 0.0, 0.0};
    int dim = 3;

    double width(int i) const { return hi[i] - lo[i]; }
    bool contains(const Point& x) const {
        for (int i = 0; i < dim; ++i)
            if (x.c[i] < lo[i] || x.c[i] > hi[i]) return false;
        return true;
    }
    double volume() const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= width(i);
        return v;
    }
    // Projection onto the x' coordinates.
    Box prime() const {
        Box b;
        b.dim = dim - 1;
        for (int i = 0; i + 1 < dim; ++i) { b.lo[i] = lo[i]; b.hi[i] = hi[i]; }
        return b;
    }
};

// |x|^p with fast paths for the exponents the suites actually use.
inline double powp(double x, double p) {
    x = std::fabs(x);
    if (p == 2.0) return x * x;
    if (p == 1.0) return x;
    if (p == 3.0) return x * x * x;
    if (p == 1.5) return x * std::sqrt(x);
    return std::pow(x, p);
}

// Deterministic 64-bit generator (splitmix64); stable across platforms,
// used everywhere a seeded stream is required.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * next_double(); }
    // standard normal via Box-Muller
    double next_normal() {
        double u1 = next_double(), u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::uint64_t state_;
};

} // namespace hardylab
