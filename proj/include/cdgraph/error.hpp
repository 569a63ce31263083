#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdg {

// Root of everything the library throws on a violated contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: out-of-range parameter, unknown label, malformed spec.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A construction would enumerate more elements than the configured ceiling.
class CeilingExceeded : public Error {
 public:
  CeilingExceeded(std::size_t requested, std::size_t ceiling)
      : Error("enumeration ceiling exceeded: " + std::to_string(requested) +
              " elements requested, ceiling is " + std::to_string(ceiling)),
        requested_(requested),
        ceiling_(ceiling) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t requested_;
  std::size_t ceiling_;
};

// An internal post-condition failed. Never a valid outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultCeiling = 1'100'000;

}  // namespace cdg
