#pragma once

#include <stdexcept>
#include <string>

namespace hserre {

enum class ErrorCode {
    EmptyInput,
    UncoveredVertex,
    VertexOutOfRange,
    CardOutOfRange,
    FaceNotInComplex,
    InvalidIndex,
    RankOutOfRange,
    InexactDivision,
    NotCodimensionTwo,
    DTooSmall,
    DTooLarge,
    InvalidField,
    InvalidEdge,
    SyntaxError,
    Overflow,
};

const char* to_string(ErrorCode code);

// Every library failure is reported through this one exception type; the
// code identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hserre
