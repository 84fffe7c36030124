#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "hardylab/geometry.hpp"
#include "hardylab/quad.hpp"
#include "hardylab/testfn.hpp"
#include "hardylab/weights.hpp"

namespace hardylab {

enum class InequalityKind {
    HardyI,            // int W_xn|u|^p + p*boundary <= p^p * int ratio |grad u|^p
    HardyII,           // int (-W_xn)|u|^p <= p^p * int ratio |grad u|^p + p*boundary
    HalfSpaceHardyI,   // HardyI specialized to psi == 0
    SingularHardy,     // |(g-p+1)/p|^p int |u|^p x_N^{g-p} <= int x_N^g |grad u|^p
    Kato,              // boundary |u|^p/|x'|^b <= (p/g)^{p-1} int (1+x_N)^{g+p-1}|x'|^{-b}|grad u|^p
    SobolevEmbedding,  // ||u||_{q(s), W_xn^{s/p}} vs dw+ norm (empirical constant)
    BorderlineSobolev, // p = N, ||u||_{q, W_xn} vs dw+ norm (empirical)
    TraceEmbedding,    // ||u||_{L^q(boundary, W)} with surface measure vs dw norm
    TwoGraph,          // the union-of-two-graphs variant of HardyI
    HSMConjecture,     // weighted Hardy-Sobolev-Maz'ya remainder form (empirical)
    W1pComparison      // dw+ norm dominates the unweighted W^{1,p} norm
};

struct InequalityCase {
    InequalityKind kind;
    double gamma = 0.0;
    double beta = 0.0;
    double s = 0.0;      // SobolevEmbedding interpolation parameter
    double q = 0.0;      // BorderlineSobolev / TraceEmbedding exponent
    int direction = +1;  // TraceEmbedding: +1 increasing, -1 decreasing
    double C1 = 0.0;     // W1pComparison: inf W_xn
    double c1 = 0.0;     // W1pComparison: (W2+) constant

    static InequalityCase hardy1() { return {InequalityKind::HardyI}; }
    static InequalityCase hardy2() { return {InequalityKind::HardyII}; }
    static InequalityCase half_space_hardy1() { return {InequalityKind::HalfSpaceHardyI}; }
    static InequalityCase singular_hardy(double gamma) {
        InequalityCase c{InequalityKind::SingularHardy};
        c.gamma = gamma;
        return c;
    }
    static InequalityCase kato(double gamma, double beta) {
        InequalityCase c{InequalityKind::Kato};
        c.gamma = gamma;
        c.beta = beta;
        return c;
    }
    static InequalityCase sobolev(double s) {
        InequalityCase c{InequalityKind::SobolevEmbedding};
        c.s = s;
        return c;
    }
    static InequalityCase borderline_sobolev(double q) {
        InequalityCase c{InequalityKind::BorderlineSobolev};
        c.q = q;
        return c;
    }
    static InequalityCase trace(double q, int direction = +1) {
        InequalityCase c{InequalityKind::TraceEmbedding};
        c.q = q;
        c.direction = direction;
        return c;
    }
    static InequalityCase two_graph() { return {InequalityKind::TwoGraph}; }
    static InequalityCase hsm(double gamma) {
        InequalityCase c{InequalityKind::HSMConjecture};
        c.gamma = gamma;
        return c;
    }
    static InequalityCase w1p_comparison(double C1, double c1) {
        InequalityCase c{InequalityKind::W1pComparison};
        c.C1 = C1;
        c.c1 = c1;
        return c;
    }

    std::string kind_name() const;
};

// exponent bookkeeping
double q_of_s(double s, double p, int N); // (N-s)p/(N-p)
double p_star(double p, int N);           // Np/(N-p)
double p_lower_star(double p, int N);     // p(N-1)/(N-p), trace-critical

struct TermValue {
    double value = 0.0;
    double err = 0.0;
};

struct InequalityReport {
    std::map<std::string, TermValue> terms;
    std::optional<double> constant_used;          // headline constant; nullopt = empirical
    std::map<std::string, double> constants;      // every constant the kind applies
    double lhs_total = 0.0;
    double rhs_total = 0.0;
    double margin = 0.0; // rhs_total - lhs_total
    double ratio = 0.0;  // constant-free rearrangement, see per-kind notes
    bool degenerate = false;
    double error_sum = 0.0;
    bool empirical = false; // no proven constant (embedding / conjecture kinds)

    nlohmann::json to_json() const;
};

using DomainRef = std::variant<const GraphDomain*, const TwoGraphDomain*>;

// Evaluate one inequality instance. The weight is ignored by kinds that
// hard-code x_N powers (SingularHardy, HSM, Kato).
InequalityReport evaluate_case(const InequalityCase& c, const std::optional<WeightSpec>& W,
                               DomainRef domain, const TestFunction& u, double p, double tol,
                               long max_cells = kDefaultMaxCells);

inline InequalityReport evaluate_case(const InequalityCase& c, const WeightSpec& W,
                                      const GraphDomain& dom, const TestFunction& u, double p,
                                      double tol, long max_cells = kDefaultMaxCells) {
    return evaluate_case(c, std::optional<WeightSpec>(W), DomainRef(&dom), u, p, tol, max_cells);
}

// Integrand builders shared by the evaluator, the Monte-Carlo cross-checks
// and the sweep runner (capture by value, safe to return).
Integrand interior_weight_integrand(WeightSpec W, TestFunction u, double p);  // signed W_xn |u|^p
Integrand gradient_weight_integrand(WeightSpec W, TestFunction u, double p);  // hardy_ratio |grad u|^p
Integrand boundary_weight_integrand(WeightSpec W, GraphDomain dom, TestFunction u,
                                    double p); // x' -> W(x',psi)|u(x',psi)|^p

struct DwNorms {
    std::optional<double> plus;  // (int ratio+ |grad u|^p)^{1/p}, increasing weights
    std::optional<double> minus; // adds the boundary term, decreasing weights
    double require_plus() const {
        if (!plus) throw IncompatibleMonotonicity("D_W^+ norm needs an increasing weight");
        return *plus;
    }
    double require_minus() const {
        if (!minus) throw IncompatibleMonotonicity("D_W^- norm needs a decreasing weight");
        return *minus;
    }
};

DwNorms dw_norms(const WeightSpec& W, const GraphDomain& domain, const TestFunction& u, double p,
                 double tol);

} // namespace hardylab
