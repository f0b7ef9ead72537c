#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmp {

enum class ErrorKind {
	DiagonalNotTwo,
	PositiveOffDiagonal,
	AsymmetricZero,
	NotSquare,
	DuplicateLabel,
	UnknownLabel,
	ZeroVector,
	NotRealRoot,
	CharacteristicTooSmall,
	HeightExceedsCutoff,
	NotPositiveRealRoot,
	HypothesisViolated,
	EnumerationCapExceeded,
	TruncationTooShallow,
	NotAPGroup,
	ChainNotNested,
	InvalidArgument,
	ConfigError,
};

std::string_view to_string(ErrorKind kind);

// All library failures carry a machine-readable kind; the CLI maps them to
// "skipped: <kind>" entries and exit codes.
class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, std::string const &what)
	    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
	      kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

  private:
	ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::DiagonalNotTwo: return "DiagonalNotTwo";
	case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
	case ErrorKind::AsymmetricZero: return "AsymmetricZero";
	case ErrorKind::NotSquare: return "NotSquare";
	case ErrorKind::DuplicateLabel: return "DuplicateLabel";
	case ErrorKind::UnknownLabel: return "UnknownLabel";
	case ErrorKind::ZeroVector: return "ZeroVector";
	case ErrorKind::NotRealRoot: return "NotRealRoot";
	case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
	case ErrorKind::HeightExceedsCutoff: return "HeightExceedsCutoff";
	case ErrorKind::NotPositiveRealRoot: return "NotPositiveRealRoot";
	case ErrorKind::HypothesisViolated: return "HypothesisViolated";
	case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
	case ErrorKind::TruncationTooShallow: return "TruncationTooShallow";
	case ErrorKind::NotAPGroup: return "NotAPGroup";
	case ErrorKind::ChainNotNested: return "ChainNotNested";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::ConfigError: return "ConfigError";
	}
	return "Unknown";
}

} // namespace kmp
