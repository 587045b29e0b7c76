#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polycensus/embedding.hpp"

namespace polycensus {

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

/// One graph as planar_code bytes under its current labeling:
/// [n][neighbors of vertex 1 as 1-based bytes..., 0]...  Requires n <= 255.
std::vector<uint8_t> planar_code_bytes(const Embedding& e);

/// Parses one graph starting at data[pos]; advances pos.
Embedding parse_planar_code(const std::vector<uint8_t>& data, size_t& pos);

/// Binary stream I/O.  Writing emits the 15-byte ASCII header once; reading
/// accepts streams with or without it.
void write_planar_code(std::ostream& out, const std::vector<Embedding>& graphs,
                       bool header = true);
std::vector<Embedding> read_planar_code(std::istream& in);

/// ASCII format, one graph per line: "n; v0: a b c; v1: ..." with neighbors
/// in rotation order and 0-based vertex ids.
std::string ascii_line(const Embedding& e);
Embedding parse_ascii_line(const std::string& line);
void write_ascii(std::ostream& out, const std::vector<Embedding>& graphs);

/// Reads either format, sniffing the header / leading bytes.
std::vector<Embedding> read_graphs(std::istream& in);

}  // namespace polycensus
