#include "folia/error.hpp"
#include "folia/leafgen.hpp"

namespace folia::leafgen {

namespace {

void validate_common(const ConstructionParams& p) {
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0))
    throw ValidationError("epsilon must lie in (0, 1)");
  if (p.n_max < 0) throw ValidationError("n_max must be nonnegative");
  if (p.n_max > 256) throw ValidationError("n_max is unreasonably deep");
  if (p.samples_per_segment < 16 || p.samples_per_segment > 1'000'000)
    throw ValidationError("samples_per_segment must lie in [16, 1000000]");
}

}  // namespace

void ConstructionParams::validate_h2() const {
  validate_common(*this);
  if (!(delta > 0.0 && delta <= 0.7853981633974483))
    throw ValidationError("delta must lie in (0, pi/4]");
}

void ConstructionParams::validate_e2() const {
  validate_common(*this);
  if (!(delta > 0.0)) throw ValidationError("delta must be positive");
  if (!(k_width > 0.0)) throw ValidationError("k_width must be positive");
  if (!(2.0 * delta <= epsilon))
    throw ValidationError(
        "parabola apex curvature 2 delta already exceeds epsilon");
}

}  // namespace folia::leafgen
