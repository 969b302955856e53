#pragma once

#include <stdexcept>
#include <string>

namespace stepup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on vector length or weight.
class DimensionError : public Error { public: using Error::Error; };
/// An index or rank lies outside its domain.
class RangeError : public Error { public: using Error::Error; };
/// An exact integer result does not fit the representable range.
class OverflowError : public Error { public: using Error::Error; };
/// The instance is too large for the supported parameter range.
class CapacityError : public Error { public: using Error::Error; };
/// A set argument is not contained in the set it must be drawn from.
class DomainError : public Error { public: using Error::Error; };
/// Arguments violate a required strict ordering.
class OrderError : public Error { public: using Error::Error; };
/// Two arguments that must differ are equal.
class DegenerateError : public Error { public: using Error::Error; };
/// Parameters are inconsistent with each other (e.g. q > C(p,k)).
class ParameterError : public Error { public: using Error::Error; };
/// A coloring dump is malformed.
class FormatError : public Error { public: using Error::Error; };
/// Reading or writing a file failed.
class IoError : public Error { public: using Error::Error; };

} // namespace stepup
