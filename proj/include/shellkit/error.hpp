#ifndef SHELLKIT_ERROR_HPP
#define SHELLKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shellkit {

enum class ErrorKind {
	EmptyFacet,
	DuplicateFacet,
	ComparableFacets,
	TooManyFacets,
	EmptyFamily,
	CycleDetected,
	UnknownElement,
	Syntax,
	InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Domain error raised on invalid input. The CLI maps these to exit status 2
/// for malformed input files and 1 for everything else.
class Error : public std::runtime_error
{
public:
	Error(ErrorKind kind, const std::string& what)
		: std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
	{
	}

	ErrorKind kind() const { return kind_; }

private:
	ErrorKind kind_;
};

} // namespace shellkit

#endif
