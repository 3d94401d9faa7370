#pragma once

#include <stdexcept>
#include <string>

namespace slq {

enum class Errc {
    NotDivisible,
    ZeroToNegativePower,
    InhomogeneousOperand,
    SiteOutOfRange,
    NonSquare,
    DimensionMismatch,
    BadPrime,
    NonIntegerCartan,
    BadIndex,
    UnsupportedL,
    IndexSumMismatch,
    DegeneratePoint,
    ChainTooLong,
    BadVariant,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ZeroToNegativePower: return "ZeroToNegativePower";
    case Errc::InhomogeneousOperand: return "InhomogeneousOperand";
    case Errc::SiteOutOfRange: return "SiteOutOfRange";
    case Errc::NonSquare: return "NonSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NonIntegerCartan: return "NonIntegerCartan";
    case Errc::BadIndex: return "BadIndex";
    case Errc::UnsupportedL: return "UnsupportedL";
    case Errc::IndexSumMismatch: return "IndexSumMismatch";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::ChainTooLong: return "ChainTooLong";
    case Errc::BadVariant: return "BadVariant";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace slq
