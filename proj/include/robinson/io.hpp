#pragma once

// Plain-text formats. Lines starting with '#' are comments everywhere.
//   matrix:        n, then n rows of n reals (zero diagonal)
//   tree:          n, then n-1 lines "u v" (0-based)
//   oriented tree: as tree, "u v" meaning u -> v
//   graph:         n, then any number of "u v" lines
//   binary matrix: "rows cols", then rows lines of cols 0/1 entries

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>

#include "robinson/c1p.hpp"
#include "robinson/core.hpp"
#include "robinson/reductions.hpp"

namespace robinson {

DissimilaritySpace read_matrix(std::istream& in);
Tree read_tree(std::istream& in);
OrientedTree read_oriented_tree(std::istream& in);
SimpleGraph read_graph(std::istream& in);
BinaryMatrix read_binary_matrix(std::istream& in);

void write_matrix(std::ostream& out, const DissimilaritySpace& space);
void write_tree(std::ostream& out, const Tree& tree);
void write_oriented_tree(std::ostream& out, const OrientedTree& ot);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_binary_matrix(std::ostream& out, const BinaryMatrix& m);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// InputError if the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

template <class Reader>
auto read_file(const std::filesystem::path& path, Reader reader) {
  std::ifstream in = open_input(path);
  return reader(in);
}

}  // namespace robinson
