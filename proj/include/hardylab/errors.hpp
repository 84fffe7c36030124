#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParameterOutOfRange : public Error {
public:
    explicit ParameterOutOfRange(const std::string& msg) : Error("ParameterOutOfRange: " + msg) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& msg) : Error("UnsupportedDimension: " + msg) {}
};

class SingularPoint : public Error {
public:
    explicit SingularPoint(const std::string& msg) : Error("SingularPoint: " + msg) {}
};

class EmptyGrid : public Error {
public:
    explicit EmptyGrid(const std::string& msg) : Error("EmptyGrid: " + msg) {}
};

class NotDifferentiable : public Error {
public:
    explicit NotDifferentiable(const std::string& msg) : Error("NotDifferentiable: " + msg) {}
};

class GraphsCross : public Error {
public:
    explicit GraphsCross(const std::string& msg) : Error("GraphsCross: " + msg) {}
};

class BadParameters : public Error {
public:
    explicit BadParameters(const std::string& msg) : Error("BadParameters: " + msg) {}
};

class NonIntegrableSingularity : public Error {
public:
    explicit NonIntegrableSingularity(const std::string& msg)
        : Error("NonIntegrableSingularity: " + msg) {}
};

// Budget exhausted: carries the best value and error estimate reached.
class TolNotReached : public Error {
public:
    TolNotReached(const std::string& msg, double value, double err)
        : Error("TolNotReached: " + msg), best_value(value), error_estimate(err) {}
    double best_value;
    double error_estimate;
};

class IncompatibleCase : public Error {
public:
    explicit IncompatibleCase(const std::string& msg) : Error("IncompatibleCase: " + msg) {}
};

class IncompatibleMonotonicity : public Error {
public:
    explicit IncompatibleMonotonicity(const std::string& msg)
        : Error("IncompatibleMonotonicity: " + msg) {}
};

class SolverFailure : public Error {
public:
    explicit SolverFailure(const std::string& msg) : Error("SolverFailure: " + msg) {}
};

class AllTrialsDegenerate : public Error {
public:
    explicit AllTrialsDegenerate(const std::string& msg)
        : Error("AllTrialsDegenerate: " + msg) {}
};

class EmptySuite : public Error {
public:
    explicit EmptySuite(const std::string& msg) : Error("EmptySuite: " + msg) {}
};

class FitAmbiguous : public Error {
public:
    explicit FitAmbiguous(const std::string& msg) : Error("FitAmbiguous: " + msg) {}
};

class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& msg) : Error("ConfigInvalid: " + msg) {}
};

} // namespace hardylab
