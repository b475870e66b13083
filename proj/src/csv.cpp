#include "folia/csv.hpp"

#include <charconv>

#include "folia/error.hpp"

namespace folia::csv {

std::string format_double(double v) {
  char buf[64];
  std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_int(long long v) {
  char buf[32];
  std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Writer::Writer(std::vector<std::string> header) : width_(header.size()) {
  if (header.empty()) throw ValidationError("csv needs at least one column");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

void Writer::add_row(std::vector<std::string> cells) {
  if (cells.size() != width_)
    throw ValidationError("csv row arity mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

std::string Writer::str() const { return out_; }

}  // namespace folia::csv
