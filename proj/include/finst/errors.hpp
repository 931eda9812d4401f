#pragma once

#include <stdexcept>
#include <string>

namespace finst {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula produced a value that contradicts another route; always a bug.
class InternalDefect : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyFailure : public InternalDefect {
 public:
  using InternalDefect::InternalDefect;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotAdmissible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidDefect : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NegativeMultiplicity : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NegativeEntry : public InvalidArgument {
 public:
  NegativeEntry(int p, int q, long long value)
      : InvalidArgument("negative table entry e^{" + std::to_string(p) + "," +
                        std::to_string(q) + "} = " + std::to_string(value)),
        p_(p),
        q_(q) {}
  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

class RankMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonFiniteRegion : public InternalDefect {
 public:
  using InternalDefect::InternalDefect;
};

class SpecialLine : public Error {
 public:
  using Error::Error;
};

}  // namespace finst
