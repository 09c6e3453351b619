#pragma once

#include <stdexcept>
#include <string>

namespace isomin {

// Every failure raised by the library derives from Error so the CLI can map
// it to an exit status in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chart point outside the chart rectangle, or a chart that violates its own
// invariants (non-positive profile, c == 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A closure produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A gradient-frame quantity was requested where grad K vanishes.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// The obstruction polynomial vanishes identically at the point.
class DegeneratePointError : public Error {
 public:
  using Error::Error;
};

// Division guard failed while propagating grad nu from the obstruction data.
class SingularPropagationError : public Error {
 public:
  using Error::Error;
};

// nu^2 reached 1 (T degenerates).
class FlatPointError : public Error {
 public:
  using Error::Error;
};

// The theta 1-form is not closed, i.e. the angle field violates M1/M2.
class IntegrabilityError : public Error {
 public:
  using Error::Error;
};

class IntegrationDivergedError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace isomin
