#pragma once

#include <stdexcept>
#include <string>

namespace continuum {

/// Invalid input: unknown symbols, malformed files, out-of-range arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (e.g. a function that must
/// be monotonic is not).
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The pattern lacks the structure an operation needs (e.g. border queries
/// on a pattern with no defined dimension).
class UnsupportedPatternError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised while generating a level graph when an edge's top symbol pair has
/// no merge rule. Carries the offending edge in dot notation.
class RefinementError : public InputError {
public:
    RefinementError(int depth, std::string left, std::string right)
        : InputError("no merge rule for adjacent pair " + left + " -- " + right +
                     " at depth " + std::to_string(depth)),
          depth_(depth), left_(std::move(left)), right_(std::move(right)) {}

    int depth() const { return depth_; }
    const std::string& left() const { return left_; }
    const std::string& right() const { return right_; }

private:
    int depth_;
    std::string left_;
    std::string right_;
};

} // namespace continuum
