#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpd {

enum class Errc {
  InvalidInput,
  ParseError,
  IncompatibleBoundary,
  TooLarge,
  NonChordalFamily,
  CapExceeded,
  BadBucket,
  NoCharacteristic,
  DomainMismatch,
  BadSequence,
  NotAnIS,
  NotAClique,
  RangeError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bpd
