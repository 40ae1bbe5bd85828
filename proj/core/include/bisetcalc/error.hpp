#pragma once

#include <stdexcept>
#include <string>

namespace biset {

// Error taxonomy. Each construction failure names a concrete witness in
// the message so it can be re-checked by hand.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAssociative : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NoInverse : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotInjective : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct CellMismatch : Error { using Error::Error; };
struct BaseMismatch : Error { using Error::Error; };
struct TypeMismatch : Error { using Error::Error; };
struct NotAFactorization : Error { using Error::Error; };
struct DegreeUnbounded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnknownGroup : Error { using Error::Error; };
struct InvalidCell : Error { using Error::Error; };
struct SearchCapExceeded : Error { using Error::Error; };

}  // namespace biset
