#include "sigsel/error.hpp"

#include <sstream>

namespace sigsel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::ZeroRange: return "ZeroRange";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::AttributeMismatch: return "AttributeMismatch";
    case ErrorKind::CoverageGap: return "CoverageGap";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyWorkload: return "EmptyWorkload";
    case ErrorKind::TrialTooLong: return "TrialTooLong";
    case ErrorKind::TooFewWorkloads: return "TooFewWorkloads";
    case ErrorKind::EmptyPlan: return "EmptyPlan";
    case ErrorKind::SignatureTooShort: return "SignatureTooShort";
    case ErrorKind::ZeroSignatureValue: return "ZeroSignatureValue";
    case ErrorKind::NoAttributes: return "NoAttributes";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::HorizonMismatch: return "HorizonMismatch";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::MissingCapacity: return "MissingCapacity";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string with_kind(ErrorKind kind, const std::string& message) {
  std::string out{to_string(kind)};
  out += ": ";
  out += message;
  return out;
}

std::string describe_gaps(const std::vector<std::int64_t>& gaps) {
  std::ostringstream os;
  os << "no observation covers timestamp" << (gaps.size() == 1 ? " " : "s ");
  constexpr std::size_t kMaxListed = 20;
  for (std::size_t i = 0; i < gaps.size() && i < kMaxListed; ++i) {
    if (i != 0) os << ", ";
    os << gaps[i];
  }
  if (gaps.size() > kMaxListed) os << ", ... (" << gaps.size() << " total)";
  return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(with_kind(kind, message)), kind_(kind) {}

CoverageGapError::CoverageGapError(std::vector<std::int64_t> gaps)
    : Error(ErrorKind::CoverageGap, describe_gaps(gaps)), gaps_(std::move(gaps)) {}

}  // namespace sigsel
