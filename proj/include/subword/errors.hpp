#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subword {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown element names, bad JSON, invalid cover lists.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input outside an operation's domain (e.g. u not below w).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The poset is outside the family an operation is defined for.
class UnsupportedPosetError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured cap (nodes, chains, word length) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// 64-bit Möbius arithmetic overflowed.
class OverflowError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// Caps guarding the combinatorial explosion of intervals and chain sets.
struct Limits {
  std::size_t max_nodes = 200000;
  std::size_t max_chains = 50000;
  std::size_t max_word_length = 12;
};

}  // namespace subword
