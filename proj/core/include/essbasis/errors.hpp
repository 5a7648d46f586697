#pragma once

#include <stdexcept>
#include <string>

namespace essbasis {

// Bad user input (unknown type, malformed weight, non-reduced word, ...).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was hit before the computation finished.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// The engine could not reach the expected dimension; the most likely cause
// is a sequence that is not birational.
class not_birational : public std::runtime_error {
public:
    explicit not_birational(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace essbasis
