#pragma once

#include <functional>

namespace imrel {

// Adaptive Simpson integration with absolute tolerance. The integrands here
// (exp of minus a cumulative hazard, hazards themselves) are smooth, so the
// classic recursion with Richardson correction is enough.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 52);

}  // namespace imrel
