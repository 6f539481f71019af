#pragma once

#include <stdexcept>
#include <string>

namespace imrel {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// history / CSV ingestion
struct ParseError : Error {
  long line = 0;  // 1-based input line, 0 if not tied to a line
  ParseError(const std::string& msg, long line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};
struct MissingCensor : ParseError { using ParseError::ParseError; };
struct DuplicateCensor : ParseError { using ParseError::ParseError; };
struct NonMonotonicTimes : ParseError { using ParseError::ParseError; };
struct UnknownEventType : ParseError { using ParseError::ParseError; };
struct NegativeTime : ParseError { using ParseError::ParseError; };

// hazard models
struct NegativeAge : Error { using Error::Error; };
struct SingularHazard : Error { using Error::Error; };

// estimation
struct NonFiniteStart : Error { using Error::Error; };
struct AllStartsFailed : Error { using Error::Error; };
struct RefitFailed : Error { using Error::Error; };

// steady state
struct EpsilonZero : Error { using Error::Error; };
struct SeriesDiverged : Error { using Error::Error; };

// optimizer
struct Infeasible : Error { using Error::Error; };
struct DegenerateAnchors : Error { using Error::Error; };
struct EmptyFront : Error { using Error::Error; };

// configuration / CLI
struct ConfigError : Error { using Error::Error; };

}  // namespace imrel
