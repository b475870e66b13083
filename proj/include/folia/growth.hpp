#pragma once

#include <string>
#include <vector>

#include "folia/log_scalar.hpp"

namespace folia::growth {

enum class OracleKind { tower, ackermann_log, table };

// Supplies the anchor radii r_n of a leaf construction as log values.
// All kinds are strictly increasing over the range where the log is exact;
// once an iterate overflows double range the value saturates and stays
// pinned at the largest finite double with the flag set.
class GrowthOracle {
 public:
  // ln r_n = T(n) with T(0) = 1, T(n) = 2^{T(n-1)}.  Exact through n = 4
  // (T(4) = 65536); T(5) = 2^65536 overflows and saturates.
  static GrowthOracle tower();

  // ln r_n = A(m, n), the two-argument Ackermann function with fixed first
  // argument.  Evaluation is memoized with an explicit work stack; exceeding
  // the step cap (1e7) raises an error instead of hanging.
  static GrowthOracle ackermann(int m);

  // ln r_n supplied directly.
  static GrowthOracle table(std::vector<double> log_values);

  // Text file with one decimal ln r_n per line; '#' starts a comment.
  static GrowthOracle table_from_file(const std::string& path);

  // Parse "tower", "ackermann:m", "table:path" or "gentle" (a built-in
  // slow table ln r_n = 2 ln(1 + n/10), feasible for the Euclidean build).
  static GrowthOracle parse(const std::string& spec);

  LogScalar log_radius(int n) const;

  OracleKind kind() const { return kind_; }

  // Stable identifier ("tower", "ackermann:3", "table:5"), used in leaf
  // file headers and reports.
  const std::string& id() const { return id_; }

  // Number of values available (tables); -1 when unbounded.
  int table_size() const;

 private:
  GrowthOracle() = default;

  OracleKind kind_ = OracleKind::tower;
  std::string id_;
  int ackermann_m_ = 0;
  std::vector<double> table_;
  mutable std::vector<LogScalar> cache_;
};

// Why no single computable oracle exhausts the construction: the intended
// sequences diagonalize over every recursive function and are therefore not
// computable; tower and ackermann are honest finite stand-ins.
std::string diagonalizer_doc();

}  // namespace folia::growth
