#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "folia/error.hpp"
#include "folia/leafgen.hpp"

namespace folia::leafgen {

namespace {

std::string hexd(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double parse_double(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ValidationError("malformed number in leaf file: " + tok);
  return v;
}

class Lines {
 public:
  explicit Lines(const std::string& text) : in_(text) {}

  std::string next() {
    std::string line;
    if (!std::getline(in_, line))
      throw ValidationError("truncated leaf file");
    return line;
  }

  // Next line split into tokens, first token must equal head.
  std::vector<std::string> expect(const std::string& head) {
    std::istringstream is(next());
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.empty() || toks[0] != head)
      throw ValidationError("leaf file: expected '" + head + "' record");
    return toks;
  }

 private:
  std::istringstream in_;
};

void write_params(std::ostream& os, const ConstructionParams& p) {
  os << "params delta " << hexd(p.delta) << " epsilon " << hexd(p.epsilon)
     << " k_width " << hexd(p.k_width) << " n_max " << p.n_max << " samples "
     << p.samples_per_segment << " allow_saturated_tail "
     << (p.allow_saturated_tail ? 1 : 0) << "\n";
}

ConstructionParams read_params(Lines& lines) {
  std::vector<std::string> t = lines.expect("params");
  if (t.size() != 13 || t[1] != "delta" || t[3] != "epsilon" ||
      t[5] != "k_width" || t[7] != "n_max" || t[9] != "samples" ||
      t[11] != "allow_saturated_tail")
    throw ValidationError("leaf file: malformed params record");
  ConstructionParams p;
  p.delta = parse_double(t[2]);
  p.epsilon = parse_double(t[4]);
  p.k_width = parse_double(t[6]);
  p.n_max = std::stoi(t[8]);
  p.samples_per_segment = std::stoi(t[10]);
  p.allow_saturated_tail = t[12] == "1";
  return p;
}

std::string read_oracle(Lines& lines) {
  std::string line = lines.next();
  if (line.rfind("oracle ", 0) != 0)
    throw ValidationError("leaf file: expected oracle record");
  return line.substr(7);
}

void write_spike(std::ostream& os, int index, const QuinticSegment& poly) {
  os << "s " << index << " " << hexd(poly.s0) << " " << hexd(poly.s1);
  for (double c : poly.c) os << " " << hexd(c);
  os << "\n";
}

QuinticSegment read_spike(const std::vector<std::string>& t, int* index) {
  if (t.size() != 10) throw ValidationError("leaf file: malformed spike");
  *index = std::stoi(t[1]);
  QuinticSegment poly;
  poly.s0 = parse_double(t[2]);
  poly.s1 = parse_double(t[3]);
  for (int k = 0; k < 6; ++k) poly.c[k] = parse_double(t[4 + k]);
  return poly;
}

}  // namespace

std::string serialize_h2(const H2Leaf& leaf) {
  std::ostringstream os;
  os << "h2leaf v1\n";
  os << "oracle " << leaf.oracle_id << "\n";
  write_params(os, leaf.params);
  os << "rho_offset " << hexd(leaf.rho_offset) << "\n";
  os << "anchors " << leaf.anchors.size() << "\n";
  for (const H2Anchor& a : leaf.anchors)
    os << "a " << hexd(a.theta) << " " << hexd(a.rho) << " "
       << (a.saturated ? 1 : 0) << "\n";
  os << "spikes " << leaf.spikes.size() << "\n";
  for (const H2SpikeSegment& s : leaf.spikes) write_spike(os, s.index, s.poly);
  os << "end\n";
  return os.str();
}

std::string serialize_e2(const E2Leaf& leaf) {
  std::ostringstream os;
  os << "e2leaf v1\n";
  os << "oracle " << leaf.oracle_id << "\n";
  write_params(os, leaf.params);
  os << "y_offset " << hexd(leaf.y_offset) << "\n";
  os << "anchors " << leaf.anchors.size() << "\n";
  for (const E2Anchor& a : leaf.anchors)
    os << "a " << hexd(a.x) << " " << hexd(a.w) << " " << (a.saturated ? 1 : 0)
       << "\n";
  os << "spikes " << leaf.spikes.size() << "\n";
  for (const E2SpikeSegment& s : leaf.spikes) write_spike(os, s.index, s.poly);
  os << "end\n";
  return os.str();
}

H2Leaf parse_h2(const std::string& text) {
  Lines lines(text);
  if (lines.next() != "h2leaf v1")
    throw ValidationError("not a v1 hyperbolic leaf file");
  H2Leaf leaf;
  leaf.oracle_id = read_oracle(lines);
  leaf.params = read_params(lines);
  std::vector<std::string> off = lines.expect("rho_offset");
  if (off.size() != 2) throw ValidationError("leaf file: malformed offset");
  leaf.rho_offset = parse_double(off[1]);
  std::vector<std::string> ac = lines.expect("anchors");
  if (ac.size() != 2) throw ValidationError("leaf file: malformed anchors");
  int n_anchors = std::stoi(ac[1]);
  for (int i = 0; i < n_anchors; ++i) {
    std::vector<std::string> t = lines.expect("a");
    if (t.size() != 4) throw ValidationError("leaf file: malformed anchor");
    leaf.anchors.push_back(
        {parse_double(t[1]), parse_double(t[2]), t[3] == "1"});
  }
  std::vector<std::string> sc = lines.expect("spikes");
  if (sc.size() != 2) throw ValidationError("leaf file: malformed spikes");
  int n_spikes = std::stoi(sc[1]);
  for (int i = 0; i < n_spikes; ++i) {
    std::vector<std::string> t = lines.expect("s");
    int index;
    QuinticSegment poly = read_spike(t, &index);
    leaf.spikes.push_back({index, poly});
  }
  lines.expect("end");
  if (leaf.anchors.empty() ||
      leaf.spikes.size() >= leaf.anchors.size())
    throw ValidationError("leaf file: inconsistent anchor/spike counts");
  return leaf;
}

E2Leaf parse_e2(const std::string& text) {
  Lines lines(text);
  if (lines.next() != "e2leaf v1")
    throw ValidationError("not a v1 euclidean leaf file");
  E2Leaf leaf;
  leaf.oracle_id = read_oracle(lines);
  leaf.params = read_params(lines);
  std::vector<std::string> off = lines.expect("y_offset");
  if (off.size() != 2) throw ValidationError("leaf file: malformed offset");
  leaf.y_offset = parse_double(off[1]);
  std::vector<std::string> ac = lines.expect("anchors");
  if (ac.size() != 2) throw ValidationError("leaf file: malformed anchors");
  int n_anchors = std::stoi(ac[1]);
  for (int i = 0; i < n_anchors; ++i) {
    std::vector<std::string> t = lines.expect("a");
    if (t.size() != 4) throw ValidationError("leaf file: malformed anchor");
    leaf.anchors.push_back(
        {parse_double(t[1]), parse_double(t[2]), t[3] == "1"});
  }
  std::vector<std::string> sc = lines.expect("spikes");
  if (sc.size() != 2) throw ValidationError("leaf file: malformed spikes");
  int n_spikes = std::stoi(sc[1]);
  for (int i = 0; i < n_spikes; ++i) {
    std::vector<std::string> t = lines.expect("s");
    int index;
    QuinticSegment poly = read_spike(t, &index);
    leaf.spikes.push_back({index, poly});
  }
  lines.expect("end");
  if (leaf.anchors.empty() ||
      leaf.spikes.size() >= leaf.anchors.size())
    throw ValidationError("leaf file: inconsistent anchor/spike counts");
  return leaf;
}

LoadedLeaf load_leaf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open leaf file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  LoadedLeaf out;
  if (text.rfind("h2leaf", 0) == 0)
    out.h2 = parse_h2(text);
  else if (text.rfind("e2leaf", 0) == 0)
    out.e2 = parse_e2(text);
  else
    throw ValidationError("unrecognized leaf file " + path);
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write leaf file " + path);
  out << text;
  if (!out) throw ValidationError("failed writing leaf file " + path);
}

}  // namespace

void save_leaf_file(const std::string& path, const H2Leaf& leaf) {
  write_file(path, serialize_h2(leaf));
}

void save_leaf_file(const std::string& path, const E2Leaf& leaf) {
  write_file(path, serialize_e2(leaf));
}

}  // namespace folia::leafgen
