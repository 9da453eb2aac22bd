#include "ribbon/errors.hpp"

namespace ribbon {

const char* error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InfiniteDegreePiece: return "InfiniteDegreePiece";
    case ErrorCode::UnsupportedFamilyParam: return "UnsupportedFamilyParam";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::BadMatching: return "BadMatching";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Cache: return "CacheError";
    }
    return "Unknown";
}

}  // namespace ribbon
