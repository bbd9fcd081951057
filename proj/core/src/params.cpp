#include "baker/params.hpp"

#include <cmath>
#include <sstream>

#include "baker/errors.hpp"

namespace baker {

std::string to_string(Regime regime) {
  return regime == Regime::Contracting ? "Contracting" : "Covering";
}

Params::Params(double beta1, double beta2) : beta1_(beta1), beta2_(beta2) {
  auto open_unit = [](double b) { return std::isfinite(b) && b > 0.0 && b < 1.0; };
  if (!open_unit(beta1) || !open_unit(beta2)) {
    std::ostringstream msg;
    msg << "beta1 and beta2 must lie in (0, 1), got (" << beta1 << ", " << beta2 << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace baker
