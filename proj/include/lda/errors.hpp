#pragma once

#include <stdexcept>
#include <string>

namespace lda {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search or verification hit its configured cap before reaching a verdict.
// Callers must treat this as "don't know", never as a boolean answer.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what_arg) : Error(what_arg) {}
};

// A requested object would exceed a hard structural cap (e.g. term size).
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what_arg) : Error(what_arg) {}
};

struct ParseError : Error {
    ParseError(const std::string& what_arg, std::size_t pos)
        : Error(what_arg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Left division a\b was requested but a does not left-divide b.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what_arg) : Error(what_arg) {}
};

// The question is outside the decidable fragment this library covers.
struct Undecidable : Error {
    explicit Undecidable(const std::string& what_arg) : Error(what_arg) {}
};

// A streamed structure event is malformed or breaks the tree discipline.
struct InvalidEvent : Error {
    explicit InvalidEvent(const std::string& what_arg) : Error(what_arg) {}
};

// A declared square structure fails validation (order, squares, acyclicity).
struct InvalidStructure : Error {
    explicit InvalidStructure(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace lda
