#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCenter : public Error {
 public:
  explicit UnknownCenter(std::size_t center)
      : Error("unknown ball center " + std::to_string(center)), center_(center) {}
  std::size_t center() const { return center_; }

 private:
  std::size_t center_;
};

class DeltaBelowResolution : public Error {
 public:
  DeltaBelowResolution(double delta, double epsilon_net)
      : Error("delta " + std::to_string(delta) + " is below the resolution floor " +
              std::to_string(epsilon_net)),
        delta_(delta),
        epsilon_net_(epsilon_net) {}
  double delta() const { return delta_; }
  double epsilon_net() const { return epsilon_net_; }

 private:
  double delta_;
  double epsilon_net_;
};

class InvalidMeasure : public Error {
 public:
  using Error::Error;
};

class InvalidPremeasure : public Error {
 public:
  using Error::Error;
};

/// Branch-and-bound exceeded its node budget; [lower, upper] brackets the optimum.
class CandidateLimitExceeded : public Error {
 public:
  CandidateLimitExceeded(double lower, double upper)
      : Error("branch-and-bound node limit exceeded; optimum in [" + std::to_string(lower) +
              ", " + std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper) {}
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// The LP certificate could not be closed; [dual, primal] is the bracket obtained.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double primal, double dual)
      : Error(what + " (primal " + std::to_string(primal) + ", dual " +
              std::to_string(dual) + ")"),
        primal_(primal),
        dual_(dual) {}
  double primal() const { return primal_; }
  double dual() const { return dual_; }

 private:
  double primal_;
  double dual_;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class InvalidWeightedCover : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  explicit DimensionUnsupported(std::size_t dim)
      : Error("dimension " + std::to_string(dim) + " is not supported (expected 1 or 2)") {}
};

class EmptyGrid : public Error {
 public:
  EmptyGrid() : Error("radius grid is empty") {}
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class LevelTooLarge : public Error {
 public:
  explicit LevelTooLarge(int level)
      : Error("net level " + std::to_string(level) + " exceeds the maximum of 14") {}
};

class ConfigParse : public Error {
 public:
  using Error::Error;
};

class MissingInstance : public Error {
 public:
  using Error::Error;
};

class SuiteUnknown : public Error {
 public:
  explicit SuiteUnknown(const std::string& name) : Error("unknown suite '" + name + "'") {}
};

}  // namespace mfh
