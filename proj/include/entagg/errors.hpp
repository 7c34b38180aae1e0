#pragma once

#include <stdexcept>
#include <string>

namespace entagg {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error { using Error::Error; };   // malformed probability vector
struct SumError : Error { using Error::Error; };          // total mass not within tolerance of 1
struct SupportError : Error { using Error::Error; };      // zero probability where positive mass is required
struct ParamError : Error { using Error::Error; };        // argument outside the operator's domain
struct MajorizationError : Error { using Error::Error; }; // required majorization relation fails
struct SizeError : Error { using Error::Error; };         // exhaustive-search size guard tripped
struct InstanceError : Error { using Error::Error; };     // ill-formed 3-partition instance
struct AggregationError : Error { using Error::Error; };  // blocks do not aggregate the given distribution
struct RatioError : Error { using Error::Error; };        // max/min probability ratio bound violated
struct ScopeError : Error { using Error::Error; };        // request outside the supported scope
struct BoundDomainError : Error { using Error::Error; };  // bound undefined for these parameters
struct IoError : Error { using Error::Error; };           // file could not be read or written

} // namespace entagg
