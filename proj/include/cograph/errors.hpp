#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cograph {

// A bounded search ran out of its node budget before reaching an answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation that requires a cograph receives a graph with an
// induced P4. The witness lists the path vertices in path order.
class NotACograph : public std::invalid_argument {
public:
    explicit NotACograph(std::vector<int> witness);
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

// Malformed input text (edge lists, JSON documents).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cograph
