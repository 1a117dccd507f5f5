#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

// Thrown when an exact computation is requested outside the sizes the
// exhaustive algorithms support.  The message names the cap that was hit.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed textual input (partition syntax, graph files, fractions).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cheeger
