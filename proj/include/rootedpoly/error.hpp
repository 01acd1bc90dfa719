#pragma once

#include <stdexcept>
#include <string>

namespace rootedpoly {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, bad polynomial text, inconsistent arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused a graph larger than its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(int vertices, int cap)
      : Error("oracle size cap: graph has " + std::to_string(vertices) +
              " vertices, cap is " + std::to_string(cap)),
        vertices_(vertices),
        cap_(cap) {}

  int vertices() const noexcept { return vertices_; }
  int cap() const noexcept { return cap_; }

 private:
  int vertices_;
  int cap_;
};

}  // namespace rootedpoly
