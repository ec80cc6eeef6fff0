#pragma once

#include <stdexcept>
#include <string>

namespace cde {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CDE_DECLARE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

CDE_DECLARE_ERROR(DomainError);
CDE_DECLARE_ERROR(ParseError);
CDE_DECLARE_ERROR(CycleError);
CDE_DECLARE_ERROR(NotReducedError);
CDE_DECLARE_ERROR(EmptyPosetError);
CDE_DECLARE_ERROR(SizeError);
CDE_DECLARE_ERROR(CapacityError);
CDE_DECLARE_ERROR(NotCoverError);
CDE_DECLARE_ERROR(RangeError);
CDE_DECLARE_ERROR(NotCornerError);
CDE_DECLARE_ERROR(NotBarelySetValuedError);
CDE_DECLARE_ERROR(NotVexillaryError);
CDE_DECLARE_ERROR(MalformedInputError);
CDE_DECLARE_ERROR(UnknownSuiteError);
// Two independent computations of the same quantity disagreed.
CDE_DECLARE_ERROR(ConsistencyError);

#undef CDE_DECLARE_ERROR

}  // namespace cde
