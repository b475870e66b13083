#pragma once

#include <string>
#include <vector>

namespace folia::csv {

// Locale-free formatting via std::to_chars: shortest round-trip decimal for
// doubles, so identical inputs serialize to identical bytes.
std::string format_double(double v);
std::string format_int(long long v);

class Writer {
 public:
  explicit Writer(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);  // ValidationError on arity
  std::string str() const;

 private:
  std::size_t width_;
  std::string out_;
};

}  // namespace folia::csv
