#ifndef GGBOUND_ERRORS_HPP
#define GGBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ggbound {

// A user-supplied evaluator returned a non-finite value.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(const std::string& what, double where)
      : std::runtime_error(what + " at x = " + std::to_string(where)),
        abscissa(where) {}

  double abscissa;
};

// Adaptive subdivision hit its depth cap (or the roundoff floor) before
// certifying the requested tolerance. Carries the best estimate so far.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), err_estimate(err) {}

  double best_estimate;
  double err_estimate;
};

// Invalid sweep configuration; `path` names the offending field.
class config_error : public std::runtime_error {
 public:
  config_error(std::string field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what),
        path(std::move(field_path)) {}

  std::string path;
};

}  // namespace ggbound

#endif
