/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/error.hh>

using std::string;
using std::string_view;

namespace treeladder
{
    auto to_string(ErrorKind kind) -> string_view
    {
        switch (kind) {
            case ErrorKind::InvalidArgument:       return "invalid-argument";
            case ErrorKind::InvalidTree:           return "invalid-tree";
            case ErrorKind::InvalidLadder:         return "invalid-ladder";
            case ErrorKind::InvalidPath:           return "invalid-path";
            case ErrorKind::InvalidChallenge:      return "invalid-challenge";
            case ErrorKind::MissingEta:            return "missing-eta";
            case ErrorKind::MissingLadderEntry:    return "missing-ladder-entry";
            case ErrorKind::PreconditionViolation: return "precondition-violation";
            case ErrorKind::Exhausted:             return "exhausted";
            case ErrorKind::ResourceLimit:         return "resource-limit";
            case ErrorKind::GenerationFailed:      return "generation-failed";
            case ErrorKind::Parse:                 return "parse-error";
            case ErrorKind::Io:                    return "io-error";
        }
        return "unknown";
    }

    Error::Error(ErrorKind kind, const string & message) :
        _kind(kind),
        _message(string{ to_string(kind) } + ": " + message)
    {
    }

    auto Error::kind() const noexcept -> ErrorKind
    {
        return _kind;
    }

    auto Error::what() const noexcept -> const char *
    {
        return _message.c_str();
    }

    ResourceLimitError::ResourceLimitError(const string & message, int lower, int upper) :
        Error(ErrorKind::ResourceLimit, message + " (bounds " + std::to_string(lower) + ".." + std::to_string(upper) + ")"),
        _lower(lower),
        _upper(upper)
    {
    }
}
