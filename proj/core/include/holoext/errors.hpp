#pragma once

#include <stdexcept>
#include <string>

namespace holoext {

/// A structural guarantee of the engine was violated (e.g. vanishing moments
/// for data that is not holomorphic). Maps to exit code 2 in the CLI.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace holoext
