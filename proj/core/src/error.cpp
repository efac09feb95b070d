#include "pagecusum/error.hpp"

namespace pagecusum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::AlarmAlreadyRaised: return "AlarmAlreadyRaised";
    case ErrorCode::BandwidthTooLarge: return "BandwidthTooLarge";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NonpositiveC: return "NonpositiveC";
    case ErrorCode::OutOfHull: return "OutOfHull";
    case ErrorCode::AlphaNotTabulated: return "AlphaNotTabulated";
    case ErrorCode::NonstationarySpec: return "NonstationarySpec";
    case ErrorCode::SampleTooShort: return "SampleTooShort";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::MissingMonitoringData: return "MissingMonitoringData";
    case ErrorCode::MissingCriticalValue: return "MissingCriticalValue";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace pagecusum
