#pragma once

#include <stdexcept>
#include <string>

namespace cvs {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two arrays/images/signatures were combined with incompatible shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A payload does not fit the available embedding space or symbol size.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Reed-Solomon decoding found more errors than the parity can correct.
class UncorrectableError : public Error {
public:
    using Error::Error;
};

/// A corrected payload failed its frame validation (delimiters, alphabet).
class FramingError : public Error {
public:
    using Error::Error;
};

/// No decodable symbol was found in an image.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Watermark extraction produced no usable signal.
class ExtractionError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure in the registry.
class IoError : public Error {
public:
    using Error::Error;
};

/// A store or record declares a format version this build does not know.
class VersionError : public Error {
public:
    using Error::Error;
};

/// A record with the same content id already exists.
class DuplicateIdError : public Error {
public:
    using Error::Error;
};

/// No record exists for the requested content id.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// A record file exists but cannot be parsed or fails validation.
class CorruptionError : public Error {
public:
    using Error::Error;
};

} // namespace cvs
