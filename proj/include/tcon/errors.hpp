#pragma once

#include <stdexcept>
#include <string>

namespace tcon {

/// Base class for all harness errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class MissingSlot : public Error {
 public:
  using Error::Error;
};

class EmptyResultSet : public Error {
 public:
  using Error::Error;
};

class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

/// Generation backend returned something that failed schema validation.
/// The raw payload is retained for diagnostics.
class MalformedGeneration : public Error {
 public:
  MalformedGeneration(const std::string& what, std::string raw)
      : Error(what), raw_payload(std::move(raw)) {}
  std::string raw_payload;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class AdapterError : public Error {
 public:
  using Error::Error;
};

class UnknownItem : public Error {
 public:
  using Error::Error;
};

class BindError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcon
