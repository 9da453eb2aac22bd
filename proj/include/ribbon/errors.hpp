#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

enum class ErrorCode {
    NotPermutation,
    NotInvolution,
    HasFixedPoint,
    Disconnected,
    InfiniteDegreePiece,
    UnsupportedFamilyParam,
    WrongFamily,
    NotAGenerator,
    BadMatching,
    TypeMismatch,
    RankMismatch,
    Config,
    ResourceLimit,
    Cache,
};

const char* error_name(ErrorCode code) noexcept;

class RibbonError : public std::runtime_error {
public:
    RibbonError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ribbon
