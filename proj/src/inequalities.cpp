#include "hardylab/inequalities.hpp"

#include <cmath>

namespace hardylab {

namespace {

constexpr double kDegenerateFloor = 1e-14;

SingularHandling combine(bool graded, bool polar) {
    if (graded && polar) return SingularHandling::GradedAndPolar;
    if (graded) return SingularHandling::GradedTowardBoundary;
    if (polar) return SingularHandling::PolarInXPrime;
    return SingularHandling::None;
}

struct TermAccum {
    InequalityReport* rep;
    long cells = 0;

    void add(const std::string& name, const IntegralResult& r) {
        rep->terms[name] = {r.value, r.error_estimate};
        rep->error_sum += r.error_estimate;
        cells += r.cells_used;
    }
};

// |u(x)|^p weighted by W_xn (signed per monotonicity)
IntegralResult interior_term(const WeightSpec& W, const GraphDomain& dom, const TestFunction& u,
                             double p, double tol, long max_cells,
                             GraphSide side = GraphSide::Above) {
    const SingularHandling hint = combine(W.xn_derivative_singular(), W.prime_singular());
    return integrate_interior(interior_weight_integrand(W, u, p), dom, u.support_box(), tol,
                              hint, side, max_cells);
}

// hardy_ratio * |grad u|^p
IntegralResult gradient_term(const WeightSpec& W, const GraphDomain& dom, const TestFunction& u,
                             double p, double tol, long max_cells,
                             GraphSide side = GraphSide::Above) {
    return integrate_interior(gradient_weight_integrand(W, u, p), dom, u.support_box(), tol,
                              combine(false, W.prime_singular()), side, max_cells);
}

// int W(x', psi(x')) |u(x', psi(x'))|^p dx' (flat measure)
IntegralResult boundary_term(const WeightSpec& W, const GraphDomain& dom, const TestFunction& u,
                             double p, double tol, long max_cells) {
    return integrate_boundary(boundary_weight_integrand(W, dom, u, p), dom, u.support_box(), tol,
                              /*with_surface_factor=*/false, combine(false, W.prime_singular()),
                              max_cells);
}

const GraphDomain& expect_graph(DomainRef d, const char* kind) {
    const auto* g = std::get_if<const GraphDomain*>(&d);
    if (!g) throw IncompatibleCase(std::string(kind) + " needs a single-graph domain");
    return **g;
}

void expect_monotonicity(const std::optional<WeightSpec>& W, Monotonicity m, const char* kind) {
    if (!W) throw IncompatibleCase(std::string(kind) + " needs a weight");
    if (W->monotonicity() != m)
        throw IncompatibleCase(std::string(kind) + " needs a " +
                               (m == Monotonicity::Increasing ? "increasing" : "decreasing") +
                               " weight, got " + W->name());
}

void finalize(InequalityReport& rep) {
    bool all_zero = true;
    for (const auto& [k, v] : rep.terms)
        if (std::fabs(v.value) >= kDegenerateFloor) all_zero = false;
    if (all_zero) {
        rep.degenerate = true;
        rep.margin = 0.0;
        rep.ratio = 0.0;
        rep.lhs_total = 0.0;
        rep.rhs_total = 0.0;
    } else {
        rep.margin = rep.rhs_total - rep.lhs_total;
    }
}

} // namespace

std::string InequalityCase::kind_name() const {
    switch (kind) {
    case InequalityKind::HardyI: return "hardy1";
    case InequalityKind::HardyII: return "hardy2";
    case InequalityKind::HalfSpaceHardyI: return "half_space_hardy1";
    case InequalityKind::SingularHardy: return "singular_hardy";
    case InequalityKind::Kato: return "kato";
    case InequalityKind::SobolevEmbedding: return "sobolev";
    case InequalityKind::BorderlineSobolev: return "borderline_sobolev";
    case InequalityKind::TraceEmbedding: return "trace";
    case InequalityKind::TwoGraph: return "two_graph";
    case InequalityKind::HSMConjecture: return "hsm_conjecture";
    case InequalityKind::W1pComparison: return "w1p_comparison";
    }
    return "unknown";
}

double q_of_s(double s, double p, int N) {
    if (!(p < N)) throw IncompatibleCase("q(s) needs p < N");
    return (N - s) * p / (N - p);
}

double p_star(double p, int N) {
    if (!(p < N)) throw IncompatibleCase("p* needs p < N");
    return N * p / (N - p);
}

double p_lower_star(double p, int N) {
    if (!(p < N)) throw IncompatibleCase("trace exponent needs p < N");
    return p * (N - 1) / (N - p);
}

Integrand interior_weight_integrand(WeightSpec W, TestFunction u, double p) {
    const double sgn = W.monotonicity() == Monotonicity::Decreasing ? -1.0 : 1.0;
    return [W, u, p, sgn](const Point& x) {
        const double uv = u.value(x);
        if (uv == 0.0) return 0.0;
        return sgn * W.eval_raw(x, p).W_xn * powp(uv, p);
    };
}

Integrand gradient_weight_integrand(WeightSpec W, TestFunction u, double p) {
    return [W, u, p](const Point& x) {
        const Vec g = u.gradient(x);
        const double gn = g.norm();
        if (gn == 0.0) return 0.0;
        return W.eval_raw(x, p).hardy_ratio * powp(gn, p);
    };
}

Integrand boundary_weight_integrand(WeightSpec W, GraphDomain dom, TestFunction u, double p) {
    return [W, dom, u, p](const Point& xp) {
        const Point x = Point::lift(xp, dom.psi(xp));
        const double uv = u.value(x);
        if (uv == 0.0) return 0.0;
        return W.value(x) * powp(uv, p);
    };
}

nlohmann::json InequalityReport::to_json() const {
    nlohmann::json j;
    nlohmann::json terms_j;
    for (const auto& [name, tv] : terms) terms_j[name] = {{"value", tv.value}, {"err", tv.err}};
    j["terms"] = terms_j;
    if (constant_used)
        j["constant"] = *constant_used;
    else
        j["constant"] = "empirical";
    j["constants"] = constants;
    j["lhs_total"] = lhs_total;
    j["rhs_total"] = rhs_total;
    j["margin"] = margin;
    j["ratio"] = ratio;
    j["degenerate"] = degenerate;
    j["error_sum"] = error_sum;
    j["empirical"] = empirical;
    return j;
}

InequalityReport evaluate_case(const InequalityCase& c, const std::optional<WeightSpec>& W,
                               DomainRef domain, const TestFunction& u, double p, double tol,
                               long max_cells) {
    if (!(p > 1.0)) throw IncompatibleCase("p must exceed 1");
    InequalityReport rep;
    TermAccum acc{&rep};
    const int N = u.dim();

    switch (c.kind) {
    case InequalityKind::HalfSpaceHardyI:
    case InequalityKind::HardyI: {
        const GraphDomain& dom = expect_graph(domain, "HardyI");
        if (c.kind == InequalityKind::HalfSpaceHardyI && !dom.is_half_space())
            throw IncompatibleCase("HalfSpaceHardyI needs the psi == 0 domain");
        expect_monotonicity(W, Monotonicity::Increasing, "HardyI");
        acc.add("interior_lhs", interior_term(*W, dom, u, p, tol, max_cells));
        acc.add("boundary_lhs", boundary_term(*W, dom, u, p, tol, max_cells));
        acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        const double cp = std::pow(p, p);
        rep.constant_used = cp;
        rep.constants = {{"gradient", cp}, {"boundary", p}};
        rep.lhs_total = rep.terms["interior_lhs"].value + p * rep.terms["boundary_lhs"].value;
        rep.rhs_total = cp * rep.terms["gradient_rhs"].value;
        // ratio strips p^p: margin >= 0  <=>  ratio >= p^{-p}
        rep.ratio = rep.lhs_total > 0.0 ? rep.terms["gradient_rhs"].value / rep.lhs_total : 0.0;
        break;
    }
    case InequalityKind::HardyII: {
        const GraphDomain& dom = expect_graph(domain, "HardyII");
        expect_monotonicity(W, Monotonicity::Decreasing, "HardyII");
        acc.add("interior_lhs", interior_term(*W, dom, u, p, tol, max_cells));
        acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        acc.add("boundary_rhs", boundary_term(*W, dom, u, p, tol, max_cells));
        const double cp = std::pow(p, p);
        rep.constant_used = cp;
        rep.constants = {{"gradient", cp}, {"boundary", p}};
        rep.lhs_total = rep.terms["interior_lhs"].value;
        rep.rhs_total = cp * rep.terms["gradient_rhs"].value + p * rep.terms["boundary_rhs"].value;
        const double rhs_raw = rep.terms["gradient_rhs"].value +
                               std::pow(p, 1.0 - p) * rep.terms["boundary_rhs"].value;
        rep.ratio = rep.lhs_total > 0.0 ? rhs_raw / rep.lhs_total : 0.0;
        break;
    }
    case InequalityKind::SingularHardy: {
        const GraphDomain& dom = expect_graph(domain, "SingularHardy");
        if (!dom.is_half_space())
            throw IncompatibleCase("SingularHardy is a half-space statement (psi == 0)");
        const double g = c.gamma;
        auto lhs = [&](const Point& x) {
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return powp(uv, p) * std::pow(x.xn(), g - p);
        };
        auto rhs = [&](const Point& x) {
            const Vec gr = u.gradient(x);
            const double gn = gr.norm();
            if (gn == 0.0) return 0.0;
            return std::pow(x.xn(), g) * powp(gn, p);
        };
        acc.add("singular_lhs",
                integrate_interior(lhs, dom, u.support_box(), tol,
                                   combine(g - p < 0.0, false), GraphSide::Above, max_cells));
        acc.add("gradient_rhs",
                integrate_interior(rhs, dom, u.support_box(), tol, SingularHandling::None,
                                   GraphSide::Above, max_cells));
        const double cst = std::pow(std::fabs((g - p + 1.0) / p), p);
        rep.constant_used = cst;
        rep.constants = {{"lhs", cst}};
        rep.lhs_total = cst * rep.terms["singular_lhs"].value;
        rep.rhs_total = rep.terms["gradient_rhs"].value;
        rep.ratio = rep.terms["singular_lhs"].value > 0.0
                        ? rep.terms["gradient_rhs"].value / rep.terms["singular_lhs"].value
                        : 0.0;
        break;
    }
    case InequalityKind::Kato: {
        const GraphDomain& dom = expect_graph(domain, "Kato");
        if (!dom.is_half_space()) throw IncompatibleCase("Kato is a half-space statement");
        const double g = c.gamma, b = c.beta;
        if (g <= 0.0) throw IncompatibleCase("Kato needs gamma > 0");
        if (b >= N - 1) throw IncompatibleCase("Kato needs beta < N-1");
        auto lhs = [&](const Point& xp) {
            const Point x = Point::lift(xp, 0.0);
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return powp(uv, p) / std::pow(xp.norm(), b);
        };
        auto rhs = [&](const Point& x) {
            const Vec gr = u.gradient(x);
            const double gn = gr.norm();
            if (gn == 0.0) return 0.0;
            return std::pow(1.0 + x.xn(), g + p - 1.0) * powp(gn, p) /
                   std::pow(x.prime_norm(), b);
        };
        acc.add("boundary_lhs",
                integrate_boundary(lhs, dom, u.support_box(), tol, false,
                                   combine(false, b > 0.0), max_cells));
        acc.add("gradient_rhs",
                integrate_interior(rhs, dom, u.support_box(), tol, combine(false, b > 0.0),
                                   GraphSide::Above, max_cells));
        const double cst = std::pow(p / g, p - 1.0);
        rep.constant_used = cst;
        rep.constants = {{"gradient", cst}};
        rep.lhs_total = rep.terms["boundary_lhs"].value;
        rep.rhs_total = cst * rep.terms["gradient_rhs"].value;
        rep.ratio = rep.lhs_total > 0.0 ? rep.terms["gradient_rhs"].value / rep.lhs_total : 0.0;
        break;
    }
    case InequalityKind::SobolevEmbedding: {
        const GraphDomain& dom = expect_graph(domain, "SobolevEmbedding");
        expect_monotonicity(W, Monotonicity::Increasing, "SobolevEmbedding");
        if (!(p < N)) throw IncompatibleCase("SobolevEmbedding needs 1 < p < N");
        if (c.s < 0.0 || c.s > p) throw IncompatibleCase("SobolevEmbedding needs s in [0, p]");
        const double q = q_of_s(c.s, p, N);
        const double sp = c.s / p;
        auto lhs = [&](const Point& x) {
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            const double wxn = W->eval_raw(x, p).W_xn;
            return (sp == 0.0 ? 1.0 : std::pow(wxn, sp)) * powp(uv, q);
        };
        acc.add("embedding_lhs",
                integrate_interior(lhs, dom, u.support_box(), tol,
                                   combine(W->xn_derivative_singular() && sp > 0.0,
                                           W->prime_singular()),
                                   GraphSide::Above, max_cells));
        acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        rep.empirical = true;
        rep.constants = {{"q_of_s", q}};
        const double lhs_norm = std::pow(std::max(0.0, rep.terms["embedding_lhs"].value), 1.0 / q);
        const double dw = std::pow(std::max(0.0, rep.terms["gradient_rhs"].value), 1.0 / p);
        rep.terms["embedding_lhs_norm"] = {lhs_norm, 0.0};
        rep.terms["dw_norm"] = {dw, 0.0};
        rep.lhs_total = lhs_norm;
        rep.rhs_total = dw;
        rep.ratio = lhs_norm > 0.0 ? dw / lhs_norm : 0.0;
        break;
    }
    case InequalityKind::BorderlineSobolev: {
        const GraphDomain& dom = expect_graph(domain, "BorderlineSobolev");
        expect_monotonicity(W, Monotonicity::Increasing, "BorderlineSobolev");
        if (p != N) throw IncompatibleCase("BorderlineSobolev needs p == N");
        if (c.q < N) throw IncompatibleCase("BorderlineSobolev needs q >= N");
        if (W->prime_singular())
            throw IncompatibleCase("BorderlineSobolev needs a weight depending on x_N only");
        auto lhs = [&](const Point& x) {
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return W->eval_raw(x, p).W_xn * powp(uv, c.q);
        };
        acc.add("embedding_lhs",
                integrate_interior(lhs, dom, u.support_box(), tol,
                                   combine(W->xn_derivative_singular(), false), GraphSide::Above,
                                   max_cells));
        acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        rep.empirical = true;
        const double lhs_norm =
            std::pow(std::max(0.0, rep.terms["embedding_lhs"].value), 1.0 / c.q);
        const double dw = std::pow(std::max(0.0, rep.terms["gradient_rhs"].value), 1.0 / p);
        rep.terms["embedding_lhs_norm"] = {lhs_norm, 0.0};
        rep.terms["dw_norm"] = {dw, 0.0};
        rep.lhs_total = lhs_norm;
        rep.rhs_total = dw;
        rep.ratio = lhs_norm > 0.0 ? dw / lhs_norm : 0.0;
        break;
    }
    case InequalityKind::TraceEmbedding: {
        const GraphDomain& dom = expect_graph(domain, "TraceEmbedding");
        const bool increasing = c.direction >= 0;
        expect_monotonicity(W, increasing ? Monotonicity::Increasing : Monotonicity::Decreasing,
                            "TraceEmbedding");
        if (p < N) {
            const double ps = p_lower_star(p, N);
            if (c.q < p - 1e-12 || c.q > ps + 1e-12)
                throw IncompatibleCase("TraceEmbedding needs q in [p, p_*]");
        } else if (p == N) {
            if (c.q < N) throw IncompatibleCase("TraceEmbedding p=N needs q >= N");
        } else {
            throw IncompatibleCase("TraceEmbedding needs p <= N");
        }
        auto tr = [&](const Point& xp) {
            const Point x = Point::lift(xp, dom.psi(xp));
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return W->value(x) * powp(uv, c.q);
        };
        acc.add("trace_lhs",
                integrate_boundary(tr, dom, u.support_box(), tol, /*with_surface_factor=*/true,
                                   combine(false, W->prime_singular()), max_cells));
        if (increasing) {
            acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        } else {
            acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
            acc.add("boundary_rhs", boundary_term(*W, dom, u, p, tol, max_cells));
        }
        const double trace_norm =
            std::pow(std::max(0.0, rep.terms["trace_lhs"].value), 1.0 / c.q);
        double dw_p = rep.terms["gradient_rhs"].value;
        if (!increasing) dw_p += rep.terms["boundary_rhs"].value;
        const double dw = std::pow(std::max(0.0, dw_p), 1.0 / p);
        rep.terms["trace_norm"] = {trace_norm, 0.0};
        rep.terms["dw_norm"] = {dw, 0.0};
        // proof-chain constant at q = p when the surface factor is bounded
        const auto lip = dom.lipschitz_bound();
        if (c.q == p && lip) {
            const double cfac = std::sqrt(1.0 + *lip * *lip);
            const double cst = increasing ? cfac * std::pow(p, p - 1.0) : cfac;
            rep.constant_used = cst;
            rep.constants = {{"surface_sup", cfac}, {"total", cst}};
            rep.lhs_total = std::pow(trace_norm, p);
            rep.rhs_total = cst * dw_p;
            rep.ratio = rep.lhs_total > 0.0 ? dw_p / rep.lhs_total : 0.0;
        } else {
            rep.empirical = true;
            rep.lhs_total = trace_norm;
            rep.rhs_total = dw;
            rep.ratio = trace_norm > 0.0 ? dw / trace_norm : 0.0;
        }
        break;
    }
    case InequalityKind::TwoGraph: {
        const auto* tg = std::get_if<const TwoGraphDomain*>(&domain);
        if (!tg) throw IncompatibleCase("TwoGraph needs a two-graph domain");
        expect_monotonicity(W, Monotonicity::Increasing, "TwoGraph");
        const GraphDomain& g1 = (*tg)->psi1(); // subgraph component
        const GraphDomain& g2 = (*tg)->psi2(); // supergraph component

        IntegralResult i1 = interior_term(*W, g1, u, p, tol, max_cells, GraphSide::Below);
        IntegralResult i2 = interior_term(*W, g2, u, p, tol, max_cells, GraphSide::Above);
        acc.add("interior_lhs", IntegralResult{i1.value + i2.value,
                                               i1.error_estimate + i2.error_estimate,
                                               i1.cells_used + i2.cells_used,
                                               SingularHandling::None});
        IntegralResult d1 = gradient_term(*W, g1, u, p, tol, max_cells, GraphSide::Below);
        IntegralResult d2 = gradient_term(*W, g2, u, p, tol, max_cells, GraphSide::Above);
        acc.add("gradient_rhs", IntegralResult{d1.value + d2.value,
                                               d1.error_estimate + d2.error_estimate,
                                               d1.cells_used + d2.cells_used,
                                               SingularHandling::None});
        // For an increasing weight the supergraph component gains its graph
        // term on the strong side and the subgraph component pays its graph
        // term on the weak side.
        acc.add("boundary_lhs", boundary_term(*W, g2, u, p, tol, max_cells));
        acc.add("boundary_rhs", boundary_term(*W, g1, u, p, tol, max_cells));
        const double cp = std::pow(p, p);
        rep.constant_used = cp;
        rep.constants = {{"gradient", cp}, {"boundary", p}};
        rep.lhs_total = rep.terms["interior_lhs"].value + p * rep.terms["boundary_lhs"].value;
        rep.rhs_total =
            cp * rep.terms["gradient_rhs"].value + p * rep.terms["boundary_rhs"].value;
        const double rhs_raw = rep.terms["gradient_rhs"].value +
                               std::pow(p, 1.0 - p) * rep.terms["boundary_rhs"].value;
        rep.ratio = rep.lhs_total > 0.0 ? rhs_raw / rep.lhs_total : 0.0;
        break;
    }
    case InequalityKind::HSMConjecture: {
        const GraphDomain& dom = expect_graph(domain, "HSMConjecture");
        if (!dom.is_half_space()) throw IncompatibleCase("HSMConjecture is a half-space statement");
        if (!(p < N)) throw IncompatibleCase("HSMConjecture needs 1 < p < N");
        const double g = c.gamma;
        if (!(g > p - 1.0)) throw IncompatibleCase("HSMConjecture needs gamma > p-1");
        const double ps = p_star(p, N);
        const double wexp = N * g / (N - p);
        auto lhs = [&](const Point& x) {
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return std::pow(x.xn(), wexp) * powp(uv, ps);
        };
        auto grad = [&](const Point& x) {
            const Vec gr = u.gradient(x);
            const double gn = gr.norm();
            if (gn == 0.0) return 0.0;
            return std::pow(x.xn(), g) * powp(gn, p);
        };
        auto sing = [&](const Point& x) {
            const double uv = u.value(x);
            if (uv == 0.0) return 0.0;
            return powp(uv, p) * std::pow(x.xn(), g - p);
        };
        acc.add("hsm_lhs", integrate_interior(lhs, dom, u.support_box(), tol,
                                              SingularHandling::None, GraphSide::Above, max_cells));
        acc.add("gradient_rhs",
                integrate_interior(grad, dom, u.support_box(), tol, SingularHandling::None,
                                   GraphSide::Above, max_cells));
        acc.add("singular_rhs",
                integrate_interior(sing, dom, u.support_box(), tol,
                                   combine(g - p < 0.0, false), GraphSide::Above, max_cells));
        const double hardy_c = std::pow((g - p + 1.0) / p, p);
        rep.empirical = true; // C_0 is the conjecture's unknown
        rep.constants = {{"hardy_subtracted", hardy_c}, {"p_star", ps}};
        const double lhs_norm =
            std::pow(std::max(0.0, rep.terms["hsm_lhs"].value), p / ps);
        const double remainder =
            rep.terms["gradient_rhs"].value - hardy_c * rep.terms["singular_rhs"].value;
        rep.terms["hsm_lhs_norm"] = {lhs_norm, 0.0};
        rep.terms["rhs_remainder"] = {remainder, 0.0};
        rep.lhs_total = lhs_norm;
        rep.rhs_total = remainder;
        rep.ratio = lhs_norm > 0.0 ? remainder / lhs_norm : 0.0;
        break;
    }
    case InequalityKind::W1pComparison: {
        const GraphDomain& dom = expect_graph(domain, "W1pComparison");
        expect_monotonicity(W, Monotonicity::Increasing, "W1pComparison");
        if (!(c.C1 > 0.0 && c.c1 > 0.0))
            throw IncompatibleCase("W1pComparison needs empirical constants C1, c1 > 0");
        auto w1p = [&](const Point& x) {
            const double uv = u.value(x);
            const Vec gr = u.gradient(x);
            return powp(uv, p) + powp(gr.norm(), p);
        };
        acc.add("w1p_lhs", integrate_interior(w1p, dom, u.support_box(), tol,
                                              SingularHandling::None, GraphSide::Above, max_cells));
        acc.add("gradient_rhs", gradient_term(*W, dom, u, p, tol, max_cells));
        const double cst = std::pow(p, p) / c.C1 + 1.0 / c.c1;
        rep.constant_used = cst;
        rep.constants = {{"total", cst}, {"C1", c.C1}, {"c1", c.c1}};
        rep.lhs_total = rep.terms["w1p_lhs"].value;
        rep.rhs_total = cst * rep.terms["gradient_rhs"].value;
        rep.ratio = rep.lhs_total > 0.0 ? rep.terms["gradient_rhs"].value / rep.lhs_total : 0.0;
        break;
    }
    }

    finalize(rep);
    return rep;
}

DwNorms dw_norms(const WeightSpec& W, const GraphDomain& domain, const TestFunction& u, double p,
                 double tol) {
    DwNorms out;
    if (W.monotonicity() == Monotonicity::Increasing) {
        const IntegralResult g = gradient_term(W, domain, u, p, tol, kDefaultMaxCells);
        out.plus = std::pow(std::max(0.0, g.value), 1.0 / p);
    } else {
        const IntegralResult g = gradient_term(W, domain, u, p, tol, kDefaultMaxCells);
        const IntegralResult b = boundary_term(W, domain, u, p, tol, kDefaultMaxCells);
        out.minus = std::pow(std::max(0.0, g.value + b.value), 1.0 / p);
    }
    return out;
}

} // namespace hardylab
