#include "polycensus/planar_code.hpp"

#include <cctype>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace polycensus {

std::vector<uint8_t> planar_code_bytes(const Embedding& e) {
  if (e.vertex_count() > 255)
    throw Error(Errc::bad_input, "planar_code covers at most 255 vertices");
  std::vector<uint8_t> out;
  out.reserve(1 + e.dart_count() + e.vertex_count());
  out.push_back(static_cast<uint8_t>(e.vertex_count()));
  for (int v = 0; v < e.vertex_count(); ++v) {
    for (int32_t d : e.rotation(v)) out.push_back(static_cast<uint8_t>(e.target(d) + 1));
    out.push_back(0);
  }
  return out;
}

Embedding parse_planar_code(const std::vector<uint8_t>& data, size_t& pos) {
  if (pos >= data.size()) throw Error(Errc::bad_input, "empty planar_code record");
  int n = data[pos++];
  if (n < 1) throw Error(Errc::bad_input, "planar_code names zero vertices");
  std::vector<std::vector<int>> neighbors(n);
  for (int v = 0; v < n; ++v) {
    while (true) {
      if (pos >= data.size()) throw Error(Errc::bad_input, "truncated planar_code record");
      uint8_t x = data[pos++];
      if (x == 0) break;
      if (x > n) throw Error(Errc::bad_input, "planar_code neighbor out of range");
      neighbors[v].push_back(x - 1);
    }
  }
  return Embedding::from_neighbor_lists(n, neighbors);
}

void write_planar_code(std::ostream& out, const std::vector<Embedding>& graphs, bool header) {
  if (header) out.write(kPlanarCodeHeader, 15);
  for (const Embedding& e : graphs) {
    auto bytes = planar_code_bytes(e);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<long>(bytes.size()));
  }
}

std::vector<Embedding> read_planar_code(std::istream& in) {
  std::vector<uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  size_t pos = 0;
  if (data.size() >= 15 && std::memcmp(data.data(), kPlanarCodeHeader, 15) == 0) pos = 15;
  std::vector<Embedding> graphs;
  while (pos < data.size()) graphs.push_back(parse_planar_code(data, pos));
  return graphs;
}

std::string ascii_line(const Embedding& e) {
  std::ostringstream out;
  out << e.vertex_count();
  for (int v = 0; v < e.vertex_count(); ++v) {
    out << "; " << v << ":";
    for (int32_t d : e.rotation(v)) out << ' ' << e.target(d);
  }
  return out.str();
}

Embedding parse_ascii_line(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.empty()) throw Error(Errc::bad_input, "empty graph line");

  auto parse_int = [](const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(Errc::bad_input, "expected an integer in graph line");
    return std::stoi(s.substr(start, i - start));
  };

  size_t i = 0;
  int n = parse_int(parts[0], i);
  if (n < 1 || static_cast<int>(parts.size()) != n + 1)
    throw Error(Errc::bad_input, "graph line lists wrong number of vertices");
  std::vector<std::vector<int>> neighbors(n);
  for (int v = 0; v < n; ++v) {
    const std::string& s = parts[v + 1];
    size_t j = 0;
    int idx = parse_int(s, j);
    if (idx != v) throw Error(Errc::bad_input, "vertices must appear in order");
    while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j >= s.size() || s[j] != ':') throw Error(Errc::bad_input, "missing ':' in graph line");
    ++j;
    while (true) {
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j >= s.size()) break;
      neighbors[v].push_back(parse_int(s, j));
    }
  }
  return Embedding::from_neighbor_lists(n, neighbors);
}

void write_ascii(std::ostream& out, const std::vector<Embedding>& graphs) {
  for (const Embedding& e : graphs) out << ascii_line(e) << '\n';
}

std::vector<Embedding> read_graphs(std::istream& in) {
  std::vector<uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  size_t pos = 0;
  bool binary = false;
  if (data.size() >= 15 && std::memcmp(data.data(), kPlanarCodeHeader, 15) == 0) {
    pos = 15;
    binary = true;
  } else {
    // ASCII lines start with a printable digit; binary bodies start with the
    // vertex count byte, which for small graphs is unprintable.
    binary = !data.empty() && (data[0] < '0' || data[0] > '9');
  }
  std::vector<Embedding> graphs;
  if (binary) {
    while (pos < data.size()) graphs.push_back(parse_planar_code(data, pos));
    return graphs;
  }
  std::string text(data.begin(), data.end());
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) graphs.push_back(parse_ascii_line(line));
  }
  return graphs;
}

}  // namespace polycensus
