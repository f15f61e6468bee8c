#include "qhopf/check.hpp"

#include <cmath>

namespace qhopf {

CheckReport make_report(std::string name, CheckParams params, double residual,
                        double threshold) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.residual = residual;
  r.threshold = threshold;
  // NaN compares false, so a poisoned residual fails.
  r.pass = residual < threshold;
  return r;
}

}  // namespace qhopf
