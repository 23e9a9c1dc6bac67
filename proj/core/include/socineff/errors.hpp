#pragma once

#include <stdexcept>
#include <string>

namespace socineff {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- context construction ----------------------------------------------------

class DuplicateName : public Error {
  public:
    explicit DuplicateName(const std::string& name)
        : Error("duplicate alternative name: " + name) {}
};

class EmptyAlternatives : public Error {
  public:
    EmptyAlternatives() : Error("alternative set must be nonempty") {}
};

class RaggedMatrix : public Error {
  public:
    RaggedMatrix() : Error("utility matrix rows have unequal lengths") {}
};

class IndexOutOfRange : public Error {
  public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class SizeLimitExceeded : public Error {
  public:
    explicit SizeLimitExceeded(std::size_t requested, std::size_t cap)
        : Error("composed context would have " + std::to_string(requested) +
                " alternatives, exceeding the cap of " + std::to_string(cap)) {}
};

class FactorMismatch : public Error {
  public:
    explicit FactorMismatch(const std::string& what) : Error(what) {}
};

class NotAPermutation : public Error {
  public:
    NotAPermutation() : Error("index sequence is not a permutation") {}
};

class EmptySubset : public Error {
  public:
    EmptySubset() : Error("restriction subset must be nonempty") {}
};

class UnknownAlternative : public Error {
  public:
    explicit UnknownAlternative(const std::string& name)
        : Error("unknown alternative: " + name) {}
};

class NotInjective : public Error {
  public:
    explicit NotInjective(const std::string& name)
        : Error("renaming maps two alternatives to: " + name) {}
};

class MissingName : public Error {
  public:
    explicit MissingName(const std::string& name)
        : Error("renaming has no image for alternative: " + name) {}
};

class InvalidLottery : public Error {
  public:
    explicit InvalidLottery(const std::string& what) : Error(what) {}
};

// -- numerics ----------------------------------------------------------------

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NumericalBreakdown : public Error {
  public:
    explicit NumericalBreakdown(const std::string& what) : Error(what) {}
};

class GuardrailExceeded : public Error {
  public:
    explicit GuardrailExceeded(const std::string& what) : Error(what) {}
};

// -- axiom suite -------------------------------------------------------------

class DegenerateDimension : public Error {
  public:
    DegenerateDimension()
        : Error("frontier dimension is zero; the per-dimension variant is undefined") {}
};

class InvalidFixture : public Error {
  public:
    explicit InvalidFixture(const std::string& what) : Error(what) {}
};

class PreconditionViolated : public Error {
  public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// -- object allocation -------------------------------------------------------

class TiedUtilities : public Error {
  public:
    explicit TiedUtilities(std::size_t individual)
        : Error("individual " + std::to_string(individual) +
                " has tied object utilities; preferences must be strict") {}
};

class InvalidEpsilon : public Error {
  public:
    explicit InvalidEpsilon(const std::string& what) : Error(what) {}
};

// -- I/O ---------------------------------------------------------------------

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace socineff
