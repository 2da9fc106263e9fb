#pragma once

#include <string>
#include <utility>

#include "ybfuse/combinatorics/tableau.hpp"
#include "ybfuse/exact/rational_function.hpp"

namespace ybfuse {

// A reduced coefficient still has a pole where a variable is substituted.
class GenuineSingularity : public Error {
 public:
  GenuineSingularity(std::size_t step, Rational point, const std::string& what)
      : Error("singular consecutive evaluation at variable " +
              std::to_string(step) + " = " + point.to_display() +
              (what.empty() ? "" : " (" + what + ")")),
        step_(step),
        point_(std::move(point)) {}
  std::size_t step() const { return step_; }
  const Rational& point() const { return point_; }

 private:
  std::size_t step_;
  Rational point_;
};

// Substitutes c_2, ..., c_n one at a time. extend(value, k) returns the
// product over the first k + 1 variables with the first k already fixed and
// the (k+1)-th left as the variable t; evaluate(live, x) substitutes t = x.
// Only one variable is ever live.
template <class Value, class Extend, class Evaluate>
Value consecutive_evaluation(Value value, const ContentString& c,
                             Extend&& extend, Evaluate&& evaluate) {
  for (std::size_t k = 1; k < c.size(); ++k) {
    auto live = extend(std::as_const(value), k);
    try {
      value = evaluate(live, c[k]);
    } catch (const PoleAtEvaluationPoint&) {
      throw GenuineSingularity(k + 1, c[k], "");
    }
  }
  return value;
}

}  // namespace ybfuse
