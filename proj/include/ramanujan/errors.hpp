#pragma once

#include <stdexcept>
#include <string>

namespace ramanujan {

// Arithmetic between two QuadNums with different radicands.
class RadicandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact division left a remainder. Inside the pipeline this is always a bug.
class NonzeroRemainder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BlockTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A minor-sum coefficient kept an irrational part or went negative.
class RationalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidNode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IsLeaf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotALeaf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotRegular : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramanujan
