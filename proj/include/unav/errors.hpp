#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unav {

// Root of the library's error hierarchy. Every throwing operation throws a
// subclass of UnavError; callers that only need coarse handling can catch
// this one type.
class UnavError : public std::runtime_error {
public:
    explicit UnavError(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidVertex : public UnavError {
public:
    explicit InvalidVertex(const std::string& msg) : UnavError(msg) {}
};

class SelfLoop : public UnavError {
public:
    explicit SelfLoop(const std::string& msg) : UnavError(msg) {}
};

class DuplicatePair : public UnavError {
public:
    explicit DuplicatePair(const std::string& msg) : UnavError(msg) {}
};

class OverlappingSets : public UnavError {
public:
    explicit OverlappingSets(const std::string& msg) : UnavError(msg) {}
};

class SizeMismatch : public UnavError {
public:
    explicit SizeMismatch(const std::string& msg) : UnavError(msg) {}
};

class TooSmall : public UnavError {
public:
    explicit TooSmall(const std::string& msg) : UnavError(msg) {}
};

class TooLarge : public UnavError {
public:
    explicit TooLarge(const std::string& msg) : UnavError(msg) {}
};

// Malformed serialized input. Positions are 1-based; column 0 means the
// whole line is at fault.
class FormatError : public UnavError {
public:
    FormatError(std::size_t line, std::size_t column, const std::string& msg)
        : UnavError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An operation's stated precondition does not hold. `which` names the
// violated inequality or condition.
class PreconditionFailed : public UnavError {
public:
    explicit PreconditionFailed(const std::string& which)
        : UnavError("precondition failed: " + which), which_(which) {}

    const std::string& which() const { return which_; }

private:
    std::string which_;
};

class ResampleExhausted : public UnavError {
public:
    explicit ResampleExhausted(const std::string& msg) : UnavError(msg) {}
};

class RetriesExhausted : public UnavError {
public:
    explicit RetriesExhausted(const std::string& msg) : UnavError(msg) {}
};

// A desk-scale pipeline stage could not meet its floor. Carries the stage
// id; the thrower attaches whatever partial trace it has to the message.
class StageFailed : public UnavError {
public:
    explicit StageFailed(const std::string& stage)
        : UnavError("stage failed: " + stage), stage_(stage) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class RepairExhausted : public UnavError {
public:
    explicit RepairExhausted(const std::string& msg) : UnavError(msg) {}
};

class InvalidWitness : public UnavError {
public:
    explicit InvalidWitness(const std::string& msg) : UnavError(msg) {}
};

class MarginTooSmall : public UnavError {
public:
    explicit MarginTooSmall(const std::string& msg) : UnavError(msg) {}
};

class BudgetExhausted : public UnavError {
public:
    explicit BudgetExhausted(const std::string& msg) : UnavError(msg) {}
};

class IoError : public UnavError {
public:
    explicit IoError(const std::string& msg) : UnavError(msg) {}
};

}  // namespace unav
