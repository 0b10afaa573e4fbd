#pragma once

#include <stdexcept>
#include <string>

namespace aismaca {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller broke an operation's precondition (e.g. a length mismatch).
class ContractError : public Error {
public:
  using Error::Error;
};

/// An argument value is outside the accepted domain.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An operation would exceed a hard resource cap.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// Malformed text input (FASTA, labels, TSV, JSON manifests).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A sequence contains a symbol the active encoding cannot map.
class EncodingError : public Error {
public:
  using Error::Error;
};

/// A numerical procedure cannot proceed (e.g. singular system).
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace aismaca
