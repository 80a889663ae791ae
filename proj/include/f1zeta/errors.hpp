#pragma once

#include <stdexcept>
#include <string>

namespace f1zeta {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses to distinct exit statuses.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (scheme files, power-log expressions, numbers).
class parse_error : public error {
 public:
  using error::error;
};

// A documented precondition of an operation does not hold.
class precondition_error : public error {
 public:
  using error::error;
};

// Evaluation hit a pole, a zero of a factor base or an essential singularity.
class singularity_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// A numerical procedure could not reach its requested accuracy.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double achieved)
      : error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace f1zeta
