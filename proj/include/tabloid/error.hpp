#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tabloid {

// Bad input: unknown candidate, incompatible composition, malformed text, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense operation would need more ballots than the configured cap allows.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("ballot space has " + std::to_string(required) +
                           " tabloids, above the size cap of " + std::to_string(cap) +
                           " (raise it with --cap or TABLOID_VOTE_CAP)"),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace tabloid
