#include "ssli/tolerance.hpp"

#include "ssli/errors.hpp"

namespace ssli {

void ToleranceConfig::validate() const {
  const double fields[] = {pairing_tol,  distinct_tol, multiplicity_tol, equality_slack,
                           quad_abs_tol, quad_rel_tol, fd_step};
  for (double v : fields) {
    if (!(v > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerances must be strictly positive");
  }
  if (!(fd_step < 1.0)) throw Error(ErrorCode::kInvalidArgument, "fd_step must be < 1");
}

}  // namespace ssli
