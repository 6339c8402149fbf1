#pragma once

#include <stdexcept>
#include <string>

namespace hstar {

// Malformed or out-of-contract input (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reference point landed on a facet hyperplane, so visibility is undefined
// (CLI exit code 3).  Ties are never broken silently.
struct genericity_error : std::runtime_error {
    explicit genericity_error(const std::string& what_, std::string functional_)
        : std::runtime_error(what_), functional(std::move(functional_)) {}
    std::string functional;  // offending functional, exact rational text
};

}  // namespace hstar
