/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_ERROR_HH
#define TREELADDER_GUARD_ERROR_HH 1

#include <exception>
#include <string>
#include <string_view>

namespace treeladder
{
    enum class ErrorKind
    {
        InvalidArgument,
        InvalidTree,
        InvalidLadder,
        InvalidPath,
        InvalidChallenge,
        MissingEta,
        MissingLadderEntry,
        PreconditionViolation,
        Exhausted,
        ResourceLimit,
        GenerationFailed,
        Parse,
        Io
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::exception
    {
        private:
            ErrorKind _kind;
            std::string _message;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind;
            auto what() const noexcept -> const char * override;
    };

    /// Thrown by the exact colouring solver when its vertex or search budget
    /// runs out. Carries the best bounds found so far.
    class ResourceLimitError : public Error
    {
        private:
            int _lower, _upper;

        public:
            ResourceLimitError(const std::string & message, int lower, int upper);

            auto lower_bound() const noexcept -> int { return _lower; }
            auto upper_bound() const noexcept -> int { return _upper; }
    };
}

#endif
