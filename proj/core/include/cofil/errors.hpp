#ifndef COFIL_ERRORS_HPP
#define COFIL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cofil {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ----- poset ------------------------------------------------------------

class CycleInRelation : public Error {
public:
    using Error::Error;
};

class EmptyExtent : public Error {
public:
    using Error::Error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

// ----- complex ----------------------------------------------------------

class DuplicateVertexInSimplex : public Error {
public:
    using Error::Error;
};

class NotASubcomplex : public Error {
public:
    using Error::Error;
};

class VertexNotInDomain : public Error {
public:
    using Error::Error;
};

class InvalidSimplicialOrder : public Error {
public:
    using Error::Error;
};

// ----- chains -----------------------------------------------------------

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class ZeroChain : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// ----- spanning ---------------------------------------------------------

class NoPath : public Error {
public:
    using Error::Error;
};

// ----- persistence ------------------------------------------------------

class UnknownGrade : public Error {
public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error {
public:
    SearchBudgetExceeded(const std::string& what, std::uint64_t budget_used)
        : Error(what), budget_used(budget_used) {}
    std::uint64_t budget_used;
};

class NotInjective : public Error {
public:
    NotInjective(const std::string& what, std::size_t grade)
        : Error(what), grade(grade) {}
    std::size_t grade;
};

class EdgeNeverExcluded : public Error {
public:
    using Error::Error;
};

class EpimorphismFailed : public Error {
public:
    EpimorphismFailed(const std::string& what, std::size_t grade)
        : Error(what), grade(grade) {}
    std::size_t grade;
};

class NotOrderPreserving : public Error {
public:
    using Error::Error;
};

class NotDimensionPreserving : public Error {
public:
    using Error::Error;
};

// ----- io ---------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

class FaceGradeViolation : public Error {
public:
    using Error::Error;
};

class UnknownPosetElement : public Error {
public:
    using Error::Error;
};

} // namespace cofil

#endif
