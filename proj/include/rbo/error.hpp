#pragma once

#include <stdexcept>
#include <string>

namespace rbo {

/// Base of every error raised by the library. Each subclass names one
/// failure condition so callers (notably the CLI) can map it to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RBO_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

RBO_DEFINE_ERROR(DivisionByZero);
RBO_DEFINE_ERROR(ModulusMismatch);
RBO_DEFINE_ERROR(FieldMismatch);
RBO_DEFINE_ERROR(ClosureViolation);
RBO_DEFINE_ERROR(OrderMismatch);
RBO_DEFINE_ERROR(UnsupportedOrder);
RBO_DEFINE_ERROR(UnsupportedPrime);
RBO_DEFINE_ERROR(UnsupportedFormat);
RBO_DEFINE_ERROR(UnboundVariable);
RBO_DEFINE_ERROR(NotAssociative);
RBO_DEFINE_ERROR(DimensionMismatch);
RBO_DEFINE_ERROR(UnknownSemigroup);
RBO_DEFINE_ERROR(ParseError);
RBO_DEFINE_ERROR(InvalidFamily);

#undef RBO_DEFINE_ERROR

}  // namespace rbo
