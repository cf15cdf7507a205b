#pragma once

#include <stdexcept>
#include <string>

namespace cordalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// diagram ingestion
struct MalformedDocument : Error { using Error::Error; };
struct InvalidDiagram : Error { using Error::Error; };
struct InvalidPdCode : Error { using Error::Error; };
struct MultiComponent : Error { using Error::Error; };
struct EmptyBraidOnMultipleStrands : Error { using Error::Error; };
struct EvenCableOrder : Error { using Error::Error; };
struct UnknownTag : Error { using Error::Error; };
struct DisconnectedSummand : Error { using Error::Error; };

// algebra
struct ResourceBudgetExceeded : Error { using Error::Error; };

// pass words / actions
struct EndpointMismatch : Error { using Error::Error; };
struct NotABasedLoop : Error { using Error::Error; };

// homomorphisms
struct IncompleteAssignment : Error { using Error::Error; };

// noncommutative algebra
struct NonInvertibleSymbol : Error { using Error::Error; };
struct MissingImage : Error { using Error::Error; };
struct NonInvertibleImage : Error { using Error::Error; };
struct SingularImage : Error { using Error::Error; };

}  // namespace cordalg
