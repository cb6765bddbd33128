#pragma once

#include <stdexcept>
#include <string>

namespace awardlink {

enum class ErrorKind {
  UnreadableInput,
  SchemaMismatch,
  NoUsableDate,
  InvalidInput,
  TransportError,
  RateLimited,
  MalformedResponse,
  NotFound,
  ParseError,
  CheckpointCorrupt,
  DanglingReference,
  EmptyInput,
  IoError,
  SpecMismatch,
  PortInUse,
  FixtureInvalid,
  InvalidMix,
  ConfigError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnreadableInput: return "UnreadableInput";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::NoUsableDate: return "NoUsableDate";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::TransportError: return "TransportError";
    case ErrorKind::RateLimited: return "RateLimited";
    case ErrorKind::MalformedResponse: return "MalformedResponse";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CheckpointCorrupt: return "CheckpointCorrupt";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::PortInUse: return "PortInUse";
    case ErrorKind::FixtureInvalid: return "FixtureInvalid";
    case ErrorKind::InvalidMix: return "InvalidMix";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace awardlink
