#include "hardylab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hardylab {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1].
constexpr int kGkn = 8;
constexpr double kXgk[kGkn] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[kGkn] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct QuadCtl {
    long cells = 0;
    long max_cells = kDefaultMaxCells;
};

struct PanelEst {
    double value;
    double err;
};

template <typename F>
PanelEst gk15(F&& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);

    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    double fv[15];
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[j] = f1;
        fv[7 + j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double mean = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[7 + j] - mean));

    const double value = resk * h;
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (!std::isfinite(value))
        throw NonIntegrableSingularity("non-finite panel value on [" + std::to_string(a) + "," +
                                       std::to_string(b) + "]");
    return {value, err};
}

struct Panel {
    double a, b, value, err;
};

struct PanelLess {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

struct Adapt1DResult {
    double value;
    double err;
};

// Global adaptive 1D integration: splits the worst panel until the summed
// error meets max(abs_tol, rel_tol*|value|). A flagged singular endpoint gets
// divergence surveillance: if the endpoint-adjacent panel is split past depth
// 30 without its contribution decaying (or grows 10x across three splits at
// any depth past 12), the integrand is declared non-integrable rather than
// silently mis-valued.
template <typename F>
Adapt1DResult adapt1d(F&& f, double a, double b, double abs_tol, double rel_tol, QuadCtl& ctl,
                      bool singular_left = false, bool singular_right = false) {
    if (!(b > a)) return {0.0, 0.0};

    auto spend = [&ctl](long k) {
        ctl.cells += k;
        if (ctl.cells > ctl.max_cells)
            throw TolNotReached("cell budget exhausted", 0.0, 0.0);
    };

    spend(1);
    Panel root{a, b, 0.0, 0.0};
    {
        const PanelEst e = gk15(f, a, b);
        root.value = e.value;
        root.err = e.err;
    }

    std::vector<Panel> heap;
    heap.reserve(128);
    heap.push_back(root);
    double total = root.value;
    double total_err = root.err;

    int end_depth = 0;
    double end_vals[3] = {std::fabs(root.value), 0.0, 0.0};
    int end_count = 1;

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        std::pop_heap(heap.begin(), heap.end(), PanelLess{});
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel no longer splittable at machine precision: accept it
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), PanelLess{});
            break;
        }

        spend(2);
        PanelEst left, right;
        try {
            left = gk15(f, worst.a, mid);
            right = gk15(f, mid, worst.b);
        } catch (const TolNotReached&) {
            throw TolNotReached("cell budget exhausted", total, total_err);
        }

        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;

        const bool touches_left = singular_left && worst.a == a;
        const bool touches_right = singular_right && worst.b == b;
        if (touches_left || touches_right) {
            const double v = std::fabs(touches_left ? left.value : right.value);
            ++end_depth;
            end_vals[2] = end_vals[1];
            end_vals[1] = end_vals[0];
            end_vals[0] = v;
            ++end_count;
            const bool nondecr = end_count >= 3 && end_vals[0] >= 0.999 * end_vals[1] &&
                                 end_vals[1] >= 0.999 * end_vals[2];
            const bool exploding = end_count >= 3 && end_vals[0] > 10.0 * end_vals[2];
            if ((end_depth > 30 && nondecr) || (end_depth > 12 && exploding))
                throw NonIntegrableSingularity(
                    "endpoint contributions do not decay under refinement near " +
                    std::to_string(touches_left ? a : b));
        }

        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), PanelLess{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), PanelLess{});
    }

    double v = 0.0, e = 0.0;
    for (const Panel& p : heap) {
        v += p.value;
        e += p.err;
    }
    return {v, e};
}

// Integrate g over [0, len] after the grading substitution s = t^2 (so
// ds = 2t dt); handles integrable endpoint singularities s^{-a}, a < 1.
template <typename G>
Adapt1DResult graded1d(G&& g, double len, double abs_tol, double rel_tol, QuadCtl& ctl) {
    if (!(len > 0.0)) return {0.0, 0.0};
    const double tmax = std::sqrt(len);
    return adapt1d([&g](double t) { return g(t * t) * 2.0 * t; }, 0.0, tmax, abs_tol, rel_tol,
                   ctl, /*singular_left=*/true);
}

struct LevelTol {
    double abs;
    double rel;
};

// Evenly split the absolute budget across the iterated levels; the relative
// part compounds, so each level gets tol/levels.
LevelTol level_tol(double tol, int levels, double outer_measure) {
    const double share = tol / levels;
    return {share / std::max(outer_measure, 1.0), share};
}

// ---- interior integration -------------------------------------------------

struct InteriorSpec {
    const Integrand* f;
    const GraphDomain* dom;
    Box box;
    GraphSide side;
    bool graded;
    double abs_tol;
    double rel_tol;
    int levels;
};

// Innermost sweep along x_N between the graph and the box.
template <typename Eval>
double inner_xn(const InteriorSpec& s, const Point& xp, QuadCtl& ctl, Eval&& call) {
    const double psiv = s.dom->psi(xp);
    const int n = s.box.dim;
    double lo, hi;
    bool graph_at_lo;
    if (s.side == GraphSide::Above) {
        lo = std::max(psiv, s.box.lo[n - 1]);
        hi = s.box.hi[n - 1];
        graph_at_lo = true;
    } else {
        lo = s.box.lo[n - 1];
        hi = std::min(psiv, s.box.hi[n - 1]);
        graph_at_lo = false;
    }
    if (!(hi > lo)) return 0.0;

    if (s.graded) {
        const double base = graph_at_lo ? lo : hi;
        const double sign = graph_at_lo ? 1.0 : -1.0;
        auto g = [&](double t) { return call(Point::lift(xp, base + sign * t)); };
        return graded1d(g, hi - lo, s.abs_tol, s.rel_tol, ctl).value;
    }
    auto g = [&](double xn) { return call(Point::lift(xp, xn)); };
    return adapt1d(g, lo, hi, s.abs_tol, s.rel_tol, ctl, /*singular_left=*/graph_at_lo,
                   /*singular_right=*/!graph_at_lo)
        .value;
}

double eval_f(const InteriorSpec& s, const Point& x) { return (*s.f)(x); }

// Plain iterated integration (x'_1 [, x'_2], x_N).
IntegralResult interior_iterated(const InteriorSpec& spec, double tol, QuadCtl& ctl) {
    const int n = spec.box.dim;
    InteriorSpec s = spec;

    IntegralResult out;
    if (n == 2) {
        const double w0 = spec.box.width(0);
        const LevelTol lt = level_tol(tol, 2, w0);
        s.abs_tol = lt.abs;
        s.rel_tol = lt.rel;
        auto g1 = [&](double x1) {
            Point xp = Point::make1(x1);
            return inner_xn(s, xp, ctl, [&](const Point& x) { return eval_f(s, x); });
        };
        const Adapt1DResult r = adapt1d(g1, spec.box.lo[0], spec.box.hi[0], tol / 2.0, tol / 2.0, ctl);
        out.value = r.value;
        out.error_estimate = r.err + lt.rel * std::max(1.0, std::fabs(r.value));
    } else {
        const double w01 = spec.box.width(0) * spec.box.width(1);
        const LevelTol lt = level_tol(tol, 3, w01);
        s.abs_tol = lt.abs;
        s.rel_tol = lt.rel;
        const LevelTol mid = level_tol(tol, 3, spec.box.width(0));
        auto g1 = [&](double x1) {
            auto g2 = [&](double x2) {
                Point xp{{x1, x2, 0.0}, 2};
                return inner_xn(s, xp, ctl, [&](const Point& x) { return eval_f(s, x); });
            };
            return adapt1d(g2, spec.box.lo[1], spec.box.hi[1], mid.abs, mid.rel, ctl).value;
        };
        const Adapt1DResult r = adapt1d(g1, spec.box.lo[0], spec.box.hi[0], tol / 3.0, tol / 3.0, ctl);
        out.value = r.value;
        out.error_estimate = r.err + 2.0 * lt.rel * std::max(1.0, std::fabs(r.value));
    }
    out.cells_used = ctl.cells;
    return out;
}

// Ray-box exit distance from the origin in direction (c, s) within the prime
// box (dim 2). The box must contain the origin.
double ray_exit(const Box& pb, double c, double s) {
    double t = std::numeric_limits<double>::infinity();
    const double d[2] = {c, s};
    for (int i = 0; i < 2; ++i) {
        if (d[i] > 1e-14)
            t = std::min(t, pb.hi[i] / d[i]);
        else if (d[i] < -1e-14)
            t = std::min(t, pb.lo[i] / d[i]);
    }
    return t;
}

// Polar treatment of the x' = 0 axis. N == 2 splits the x'_1 range at 0 with
// grading; N == 3 integrates rho (graded at 0) and theta.
IntegralResult interior_polar(const InteriorSpec& spec, double tol, QuadCtl& ctl) {
    const int n = spec.box.dim;
    InteriorSpec s = spec;
    IntegralResult out;

    if (n == 2) {
        const double lo0 = spec.box.lo[0], hi0 = spec.box.hi[0];
        const LevelTol lt = level_tol(tol, 2, hi0 - lo0);
        s.abs_tol = lt.abs;
        s.rel_tol = lt.rel;
        auto column = [&](double x1) {
            Point xp = Point::make1(x1);
            return inner_xn(s, xp, ctl, [&](const Point& x) { return eval_f(s, x); });
        };
        double v = 0.0, e = 0.0;
        if (hi0 > 0.0) {
            auto g = [&](double r) { return column(r); };
            const Adapt1DResult rr = graded1d(g, hi0, tol / 4.0, tol / 2.0, ctl);
            v += rr.value;
            e += rr.err;
        }
        if (lo0 < 0.0) {
            auto g = [&](double r) { return column(-r); };
            const Adapt1DResult rr = graded1d(g, -lo0, tol / 4.0, tol / 2.0, ctl);
            v += rr.value;
            e += rr.err;
        }
        out.value = v;
        out.error_estimate = e + lt.rel * std::max(1.0, std::fabs(v));
    } else {
        const Box pb = spec.box.prime();
        const double two_pi = 6.283185307179586;
        const LevelTol lt = level_tol(tol, 3, two_pi * 0.5 * (pb.width(0) + pb.width(1)));
        s.abs_tol = lt.abs;
        s.rel_tol = lt.rel;
        const LevelTol mid = level_tol(tol, 3, two_pi);
        auto g_theta = [&](double th) {
            const double ct = std::cos(th), st = std::sin(th);
            const double rmax = ray_exit(pb, ct, st);
            auto g_rho = [&](double rho) {
                Point xp{{rho * ct, rho * st, 0.0}, 2};
                const double col =
                    inner_xn(s, xp, ctl, [&](const Point& x) { return eval_f(s, x); });
                return col * rho; // polar Jacobian
            };
            return graded1d(g_rho, rmax, mid.abs, mid.rel, ctl).value;
        };
        const Adapt1DResult r = adapt1d(g_theta, 0.0, two_pi, tol / 3.0, tol / 3.0, ctl);
        out.value = r.value;
        out.error_estimate = r.err + 2.0 * lt.rel * std::max(1.0, std::fabs(r.value));
    }
    out.cells_used = ctl.cells;
    return out;
}

// the polar device needs the x'=0 axis strictly inside the prime box
bool polar_applicable(const Box& box, int prime_coords) {
    for (int i = 0; i < prime_coords; ++i)
        if (!(box.lo[i] < -1e-12 && box.hi[i] > 1e-12)) return false;
    return true;
}

} // namespace

IntegralResult integrate_interior(const Integrand& f, const GraphDomain& domain, const Box& box,
                                  double tol, SingularHandling hint, GraphSide side,
                                  long max_cells) {
    if (tol <= 0.0) throw BadParameters("integrate_interior needs tol > 0");
    if (box.dim != domain.dim())
        throw BadParameters("box dimension does not match the domain");
    for (int i = 0; i < box.dim; ++i)
        if (!(box.hi[i] >= box.lo[i])) throw BadParameters("degenerate integration box");

    QuadCtl ctl;
    ctl.max_cells = max_cells;

    InteriorSpec spec;
    spec.f = &f;
    spec.dom = &domain;
    spec.box = box;
    spec.side = side;
    spec.graded =
        hint == SingularHandling::GradedTowardBoundary || hint == SingularHandling::GradedAndPolar;
    spec.levels = box.dim;

    const bool want_polar =
        hint == SingularHandling::PolarInXPrime || hint == SingularHandling::GradedAndPolar;

    IntegralResult r;
    if (want_polar && polar_applicable(box, box.dim - 1)) {
        r = interior_polar(spec, tol, ctl);
        r.singular_handling = hint;
    } else {
        r = interior_iterated(spec, tol, ctl);
        r.singular_handling = spec.graded ? SingularHandling::GradedTowardBoundary
                                          : SingularHandling::None;
    }
    return r;
}

IntegralResult integrate_boundary(const Integrand& f, const GraphDomain& domain, const Box& box,
                                  double tol, bool with_surface_factor, SingularHandling hint,
                                  long max_cells) {
    if (tol <= 0.0) throw BadParameters("integrate_boundary needs tol > 0");
    const Box pb = box.dim == domain.dim() ? box.prime() : box;
    if (pb.dim != domain.dim() - 1)
        throw BadParameters("boundary box dimension does not match the domain");

    QuadCtl ctl;
    ctl.max_cells = max_cells;

    // a.e. surface factor: the cone kink at x'_1 = 0 has measure zero and a
    // two-sided limit, so quadrature may use it directly.
    auto factor = [&](const Point& xp) -> double {
        if (!with_surface_factor) return 1.0;
        if (domain.family() == PsiFamily::PiecewiseLinearCone && xp.c[0] == 0.0) {
            Point q = xp;
            q.c[0] = 1e-30;
            return domain.surface_factor(q);
        }
        return domain.surface_factor(xp);
    };
    auto g = [&](const Point& xp) { return f(xp) * factor(xp); };

    const bool want_polar =
        hint == SingularHandling::PolarInXPrime || hint == SingularHandling::GradedAndPolar;

    IntegralResult out;
    if (pb.dim == 1) {
        if (want_polar && pb.lo[0] < -1e-12 && pb.hi[0] > 1e-12) {
            double v = 0.0, e = 0.0;
            auto right = [&](double r) { return g(Point::make1(r)); };
            auto left = [&](double r) { return g(Point::make1(-r)); };
            Adapt1DResult r1 = graded1d(right, pb.hi[0], tol / 2.0, tol, ctl);
            Adapt1DResult r2 = graded1d(left, -pb.lo[0], tol / 2.0, tol, ctl);
            v = r1.value + r2.value;
            e = r1.err + r2.err;
            out.value = v;
            out.error_estimate = e;
            out.singular_handling = SingularHandling::PolarInXPrime;
        } else {
            auto g1 = [&](double x1) { return g(Point::make1(x1)); };
            Adapt1DResult r = adapt1d(g1, pb.lo[0], pb.hi[0], tol, tol, ctl);
            out.value = r.value;
            out.error_estimate = r.err;
        }
    } else {
        if (want_polar && polar_applicable(pb, 2)) {
            const double two_pi = 6.283185307179586;
            const LevelTol mid = level_tol(tol, 2, two_pi);
            auto g_theta = [&](double th) {
                const double ct = std::cos(th), st = std::sin(th);
                const double rmax = ray_exit(pb, ct, st);
                auto g_rho = [&](double rho) {
                    return g(Point{{rho * ct, rho * st, 0.0}, 2}) * rho;
                };
                return graded1d(g_rho, rmax, mid.abs, mid.rel, ctl).value;
            };
            Adapt1DResult r = adapt1d(g_theta, 0.0, two_pi, tol / 2.0, tol / 2.0, ctl);
            out.value = r.value;
            out.error_estimate = r.err + mid.rel * std::max(1.0, std::fabs(r.value));
            out.singular_handling = SingularHandling::PolarInXPrime;
        } else {
            const LevelTol in = level_tol(tol, 2, pb.width(0));
            auto g1 = [&](double x1) {
                auto g2 = [&](double x2) { return g(Point{{x1, x2, 0.0}, 2}); };
                return adapt1d(g2, pb.lo[1], pb.hi[1], in.abs, in.rel, ctl).value;
            };
            Adapt1DResult r = adapt1d(g1, pb.lo[0], pb.hi[0], tol / 2.0, tol / 2.0, ctl);
            out.value = r.value;
            out.error_estimate = r.err + in.rel * std::max(1.0, std::fabs(r.value));
        }
    }
    out.cells_used = ctl.cells;
    return out;
}

double integrate_truncated(const Integrand& f, const GraphDomain& domain, const Box& box,
                           double eps, long max_cells) {
    if (!(eps > 0.0)) throw BadParameters("integrate_truncated needs eps > 0");
    const Box& b = box;
    const double tol = 1e-8;

    QuadCtl ctl;
    ctl.max_cells = max_cells;

    // same iterated sweep as the interior path, with the lower limit
    // lifted to psi(x') + eps
    const int n = b.dim;
    IntegralResult out;
    if (n == 2) {
        const LevelTol lt = level_tol(tol, 2, b.width(0));
        auto g1 = [&](double x1) {
            Point xp = Point::make1(x1);
            const double lo = std::max(domain.psi(xp) + eps, b.lo[n - 1]);
            const double hi = b.hi[n - 1];
            if (!(hi > lo)) return 0.0;
            auto g = [&](double xn) { return f(Point::lift(xp, xn)); };
            return adapt1d(g, lo, hi, lt.abs, lt.rel, ctl).value;
        };
        out.value = adapt1d(g1, b.lo[0], b.hi[0], tol / 2.0, tol / 2.0, ctl).value;
    } else {
        const LevelTol lt = level_tol(tol, 3, b.width(0) * b.width(1));
        const LevelTol mid = level_tol(tol, 3, b.width(0));
        auto g1 = [&](double x1) {
            auto g2 = [&](double x2) {
                Point xp{{x1, x2, 0.0}, 2};
                const double lo = std::max(domain.psi(xp) + eps, b.lo[n - 1]);
                const double hi = b.hi[n - 1];
                if (!(hi > lo)) return 0.0;
                auto g = [&](double xn) { return f(Point::lift(xp, xn)); };
                return adapt1d(g, lo, hi, lt.abs, lt.rel, ctl).value;
            };
            return adapt1d(g2, b.lo[1], b.hi[1], mid.abs, mid.rel, ctl).value;
        };
        out.value = adapt1d(g1, b.lo[0], b.hi[0], tol / 3.0, tol / 3.0, ctl).value;
    }
    return out.value;
}

McResult mc_oracle(const Integrand& f, const Box& box, long n, std::uint64_t seed,
                   const GraphDomain* clip, GraphSide side) {
    if (n < 1000) throw BadParameters("mc_oracle needs n >= 1000");
    Rng rng(seed);
    const double vol = box.volume();

    long double sum = 0.0L, sum2 = 0.0L;
    Point x;
    x.dim = box.dim;
    for (long i = 0; i < n; ++i) {
        for (int d = 0; d < box.dim; ++d) x.c[d] = rng.uniform(box.lo[d], box.hi[d]);
        double v = 0.0;
        bool inside = true;
        if (clip) {
            const double psiv = clip->psi(x.prime());
            inside = side == GraphSide::Above ? x.xn() > psiv : x.xn() < psiv;
        }
        if (inside) v = f(x);
        sum += v;
        sum2 += static_cast<long double>(v) * v;
    }
    const double mean = static_cast<double>(sum / n);
    const double var =
        std::max(0.0, static_cast<double>((sum2 - sum * sum / n) / (n - 1)));
    McResult r;
    r.value = vol * mean;
    r.std_error = vol * std::sqrt(var / n);
    r.n = n;
    return r;
}

} // namespace hardylab
