#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pagecusum {

enum class ErrorCode {
  InvalidArgument,
  DegenerateSample,
  RankDeficient,
  DimensionMismatch,
  GammaOutOfRange,
  AlphaOutOfRange,
  AlarmAlreadyRaised,
  BandwidthTooLarge,
  GridTooCoarse,
  NonpositiveC,
  OutOfHull,
  AlphaNotTabulated,
  NonstationarySpec,
  SampleTooShort,
  MalformedCsv,
  MissingMonitoringData,
  MissingCriticalValue,
  UnknownScenario,
  IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-status logic) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace pagecusum
