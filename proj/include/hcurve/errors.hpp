#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcurve {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text or input document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// Evaluation outside a function's domain (log/sqrt of a negative, x/0, overflow).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double at)
      : Error(what + " at s = " + std::to_string(at)), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

/// The contact part of the velocity vanishes (or is below tolerance).
class RegularityError : public Error {
 public:
  RegularityError(const std::string& what, double at)
      : Error(what + " near parameter " + std::to_string(at)), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

/// Bad argument combinations: empty intervals, wrong arity, c1 = 0 for a helix ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two curves that were expected to differ by a PSH(1) element do not.
class MisalignmentError : public Error {
 public:
  MisalignmentError(const std::string& what, double achieved)
      : Error(what + " (achieved " + std::to_string(achieved) + ")"), achieved_(achieved) {}

  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Closed forms that divide by the p-curvature were handed kappa = 0.
class ZeroCurvatureError : public Error {
 public:
  ZeroCurvatureError(const std::string& what, double at)
      : Error(what + " at s = " + std::to_string(at)), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

/// A square root of a negative profile (g^2 < 0) was required.
class NegativeRadicandError : public Error {
 public:
  NegativeRadicandError(const std::string& what, double at)
      : Error(what + " at s = " + std::to_string(at)), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

/// kappa is neither identically zero nor bounded away from zero on the interval.
class BranchMismatchError : public Error {
 public:
  using Error::Error;
};

/// More than one frame plane contains the position vector but no canonical fit confirms it.
class AmbiguousClassificationError : public Error {
 public:
  AmbiguousClassificationError(const std::string& what, std::vector<std::string> candidates)
      : Error(what), candidates_(std::move(candidates)) {}

  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

}  // namespace hcurve
