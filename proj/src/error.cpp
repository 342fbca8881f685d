#include "hserre/error.hpp"

namespace hserre {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::CardOutOfRange: return "CardOutOfRange";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotCodimensionTwo: return "NotCodimensionTwo";
    case ErrorCode::DTooSmall: return "DTooSmall";
    case ErrorCode::DTooLarge: return "DTooLarge";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace hserre
