#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folia/growth.hpp"
#include "folia/log_scalar.hpp"
#include "folia/quintic.hpp"

namespace folia::leafgen {

struct ConstructionParams {
  double delta = 0.1;             // junction angle / parabola coefficient
  double epsilon = 0.1;           // curvature pinch half-width
  double k_width = 10.0;          // parabola half-width (Euclidean build)
  int n_max = 4;                  // deepest spike anchor index
  int samples_per_segment = 4096; // curvature scan grid per segment
  bool allow_saturated_tail = false;

  void validate_h2() const;  // throws ValidationError
  void validate_e2() const;
};

// ----------------------------------------------------------------------------
// Hyperbolic leaf: rho(theta) = ln r(theta) on [theta_min, pi - theta_min],
// mirror-symmetric about pi/2.  Core horocircle rho = -ln sin theta on
// [delta, pi - delta]; spike segment n is a quintic in s = ln theta over
// [delta/2^n, delta/2^{n-1}] joining anchor n to anchor n-1 with matching
// first and second derivatives.  Anchor n sits at theta = delta/2^n and
// carries the oracle growth rebased to the core junction:
//   rho(delta/2^n) = -ln sin delta + (ln r_n - ln r_0).
// ----------------------------------------------------------------------------

struct H2Anchor {
  double theta = 0.0;
  double rho = 0.0;       // stored value, reproduced exactly by eval
  bool saturated = false;
};

struct H2SpikeSegment {
  int index = 0;          // 1..n_max; covers [anchor n, anchor n-1]
  QuinticSegment poly;    // rho as a function of s = ln theta
};

class H2Leaf {
 public:
  ConstructionParams params;
  std::string oracle_id;
  std::vector<H2Anchor> anchors;        // 0..n_max
  std::vector<H2SpikeSegment> spikes;   // 1..n_max
  double rho_offset = 0.0;              // dilation shift ln t

  double delta() const { return params.delta; }
  double theta_min() const;
  double theta_max() const;  // pi - theta_min

  // rho = ln r at angle theta; DomainError outside [theta_min, theta_max].
  // Anchor angles return the stored anchor value exactly.
  double rho(double theta) const;

  // rho with d rho/ds and d^2 rho/ds^2 (s = ln theta), for theta at or below
  // pi/2; used by scans, quadrature and junction tests.
  void rho_derivs(double theta, double* v, double* g, double* gp) const;
};

H2Leaf build_h2_leaf(const ConstructionParams& params,
                     const growth::GrowthOracle& oracle);

double eval_leaf(const H2Leaf& leaf, double theta);

// Arc length along the leaf between angles theta1 < theta2, adaptive Simpson
// of sqrt(g^2 + theta^2)/sin theta in s per piece.  Always at least the
// hyperbolic distance between the endpoints; returned in log form.
LogScalar leaf_arc_length(const H2Leaf& leaf, double theta1, double theta2);

// ----------------------------------------------------------------------------
// Euclidean leaf: even graph y = phi(x); parabola delta x^2 on |x| <= K and
// spike segments stored as x(w), w = ln y, so the nearly vertical tail stays
// well conditioned.  Anchor n sits at x = K + n with
//   ln phi(K + n) = ln(delta K^2) + (ln r_n - ln r_0).
// ----------------------------------------------------------------------------

struct E2Anchor {
  double x = 0.0;
  double w = 0.0;          // ln phi(x), stored
  bool saturated = false;
};

struct E2SpikeSegment {
  int index = 0;           // 1..n_max; covers [anchor n-1, anchor n]
  QuinticSegment poly;     // x as a function of w = ln y
};

class E2Leaf {
 public:
  ConstructionParams params;
  std::string oracle_id;
  std::vector<E2Anchor> anchors;       // 0..n_max
  std::vector<E2SpikeSegment> spikes;  // 1..n_max
  double y_offset = 0.0;               // translation shift

  double k_width() const { return params.k_width; }
  double x_max() const;                // K + n_max

  // ln phi(x) for 0 < |x| <= x_max (before translation); spike heights are
  // recovered from x(w) by monotone bisection.  x = 0 returns -inf.
  double log_height(double x) const;

  // phi(x) + y_offset as a plain double; DomainError when it overflows.
  double height(double x) const;

  // Arc length of the graph between abscissas 0 <= x1 < x2 <= x_max, in log
  // form (spike pieces integrate in w).
  LogScalar graph_length(double x1, double x2) const;
};

E2Leaf build_e2_leaf(const ConstructionParams& params,
                     const growth::GrowthOracle& oracle);

double eval_e2_log_height(const E2Leaf& leaf, double x);

// ----------------------------------------------------------------------------
// One-parameter families filling the product foliation: hyperbolic dilations
// z -> t z of the H2 leaf, vertical translations of the E2 leaf.  Leaves at
// distinct parameters are disjoint because they differ by an exact constant
// offset of rho (resp. height).
// ----------------------------------------------------------------------------

class H2Family {
 public:
  explicit H2Family(H2Leaf base) : base_(std::move(base)) {}

  const H2Leaf& base() const { return base_; }

  // The leaf t * base with log t = log_t.
  H2Leaf leaf_at(double log_t) const;

  // log t of the unique leaf through (theta, log_r), found by monotone
  // bisection on the offset; DomainError when theta is outside the domain.
  double leaf_through(double theta, double log_r) const;

 private:
  H2Leaf base_;
};

class E2Family {
 public:
  explicit E2Family(E2Leaf base) : base_(std::move(base)) {}

  const E2Leaf& base() const { return base_; }

  E2Leaf leaf_at(double offset) const;

  // Offset of the leaf through (x, y), by monotone bisection.
  double leaf_through(double x, double y) const;

 private:
  E2Leaf base_;
};

// ----------------------------------------------------------------------------
// Serialization: plain text, hex floats, byte-exact round trip.
// ----------------------------------------------------------------------------

std::string serialize_h2(const H2Leaf& leaf);
std::string serialize_e2(const E2Leaf& leaf);
H2Leaf parse_h2(const std::string& text);
E2Leaf parse_e2(const std::string& text);

// Reads either kind from a file; exactly one of the results is set.
struct LoadedLeaf {
  std::optional<H2Leaf> h2;
  std::optional<E2Leaf> e2;
};
LoadedLeaf load_leaf_file(const std::string& path);
void save_leaf_file(const std::string& path, const H2Leaf& leaf);
void save_leaf_file(const std::string& path, const E2Leaf& leaf);

}  // namespace folia::leafgen
