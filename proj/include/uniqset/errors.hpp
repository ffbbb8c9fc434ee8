#pragma once

#include <stdexcept>
#include <string>

namespace uniqset {

/// Base class of every error this library throws deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeInput : Error {
    explicit NegativeInput(const std::string& what = "negative input") : Error(what) {}
};

struct NonTerminatingExpansion : Error {
    explicit NonTerminatingExpansion(const std::string& what)
        : Error(what) {}
};

struct NegativeComponent : Error {
    explicit NegativeComponent(const std::string& what = "component has a negative part")
        : Error(what) {}
};

struct ClassTooLarge : Error {
    std::string cardinality_estimate;
    explicit ClassTooLarge(std::string estimate)
        : Error("class cardinality " + estimate + " exceeds the enumeration limit"),
          cardinality_estimate(std::move(estimate)) {}
};

struct PrecisionInsufficient : Error {
    unsigned bits;
    explicit PrecisionInsufficient(unsigned bits_)
        : Error("enclosure at " + std::to_string(bits_) + " bits straddles a grid point"),
          bits(bits_) {}
};

struct NonRationalResult : Error {
    explicit NonRationalResult(const std::string& what = "result is not a Gaussian rational")
        : Error(what) {}
};

struct BallTooWide : Error {
    explicit BallTooWide(const std::string& what = "ball radius too wide for digit extraction")
        : Error(what) {}
};

struct MalformedDigits : Error {
    explicit MalformedDigits(const std::string& what) : Error(what) {}
};

struct SparsityExceeded : Error {
    explicit SparsityExceeded(const std::string& what) : Error(what) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what = "internal consistency failure: singular system")
        : Error(what) {}
};

struct InconsistentObservation : Error {
    explicit InconsistentObservation(const std::string& what) : Error(what) {}
};

struct NoCandidate : Error {
    explicit NoCandidate(const std::string& what = "no class member matches the observation")
        : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long n)
        : Error("length " + std::to_string(n) + " is not prime (pass the composite override to scan anyway)") {}
};

struct ScanTooLarge : Error {
    explicit ScanTooLarge(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(what) {}
};

}  // namespace uniqset
