#pragma once

#include <stdexcept>

namespace minell {

// Malformed or out-of-range input (files, expressions, parameters). CLI exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graph whose intersection form is not negative definite, i.e. not the dual
// graph of a resolution. CLI exit code 2.
struct not_resolution_graph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace minell
