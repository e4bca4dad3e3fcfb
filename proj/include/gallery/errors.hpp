#pragma once

#include <stdexcept>
#include <string>

namespace gallery {

// Polygon validation failure; `kind` plus the offending indices.
struct ValidationError : std::runtime_error {
    enum class Kind { TooFewVertices, DuplicateVertex, CollinearRun, SelfIntersection };

    Kind kind;
    int i = -1;
    int j = -1;

    ValidationError(Kind k, std::string msg, int i_ = -1, int j_ = -1)
        : std::runtime_error(std::move(msg)), kind(k), i(i_), j(j_) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& msg) : std::out_of_range(msg) {}
};

struct NotAnEar : std::invalid_argument {
    explicit NotAnEar(int index)
        : std::invalid_argument("vertex " + std::to_string(index) + " is not an ear"),
          index(index) {}
    int index;
};

struct WouldDegenerate : std::invalid_argument {
    WouldDegenerate() : std::invalid_argument("removing an ear from a triangle leaves a segment") {}
};

struct NotDivisibleBy3 : std::invalid_argument {
    explicit NotDivisibleBy3(int n)
        : std::invalid_argument("vertex count " + std::to_string(n) + " is not divisible by 3") {}
};

struct PointOutsidePolygon : std::invalid_argument {
    explicit PointOutsidePolygon(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidGuardIndex : std::out_of_range {
    explicit InvalidGuardIndex(int index)
        : std::out_of_range("guard index " + std::to_string(index) + " out of range"),
          index(index) {}
    int index;
};

struct GenerationFailed : std::runtime_error {
    explicit GenerationFailed(const std::string& msg) : std::runtime_error(msg) {}
};

// Polygon file parse failure. line/column are 1-based when known,
// 0 when the error is structural rather than textual.
struct SyntaxError : std::runtime_error {
    SyntaxError(std::string msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
    int line;
    int column;
};

}  // namespace gallery
