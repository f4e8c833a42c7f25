#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qs/matrix.hpp"

namespace qs {

using DimVector = std::vector<std::int64_t>;

struct Vertex {
  std::string name;
  int mult = 1;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

// Quiver with a multiplicity d_i >= 1 at every vertex. Parallel arrows are allowed, edge-loops are not.
class QuiverMult {
 public:
  QuiverMult(std::vector<Vertex> vertices, std::vector<Arrow> arrows);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  int mult(std::size_t i) const { return vertices_[i].mult; }
  std::vector<int> multiplicities() const;

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  // throws UnknownVertex
  std::size_t vertex_index(std::string_view name) const;

  friend bool operator==(const QuiverMult& a, const QuiverMult& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
};

// Grammar:  quiver { (vertex NAME mult INT | arrow NAME : NAME -> NAME) [;] ... }   '#' starts a comment.
QuiverMult parse_quiver(std::string_view text);
std::string serialize_quiver(const QuiverMult& q);
std::string to_dot(const QuiverMult& q);

// Arrow of the double H = Omega + Omega-bar. Index h < m is the original arrow h,
// index h >= m is the reverse of arrow h - m.
struct HArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  int sign = 1;
  std::size_t original = 0;
  int order = 1;     // d_h = gcd(d_s, d_t)
  int f = 1;         // f_h = d_t / d_h
  int f_bar = 1;     // f_{h-bar} = d_s / d_h
};

class DoubleQuiver {
 public:
  explicit DoubleQuiver(const QuiverMult& q);

  std::size_t size() const { return arrows_.size(); }
  std::size_t original_count() const { return arrows_.size() / 2; }
  const HArrow& operator[](std::size_t h) const { return arrows_[h]; }
  std::size_t bar(std::size_t h) const { return h < original_count() ? h + original_count() : h - original_count(); }
  // arrows h with t(h) = i, in index order
  std::vector<std::size_t> into(std::size_t i) const;

 private:
  std::vector<HArrow> arrows_;
};

struct CartanData {
  ZMatrix adjacency;     // a_ij: arrows of H from i to j
  QMatrix reduced;       // a_ij / d_ij
  std::vector<int> mult; // diagonal of D
  ZMatrix cartan;        // 2 Id - A'D
  ZMatrix symmetrized() const;  // D C
};

int gcd_mult(const QuiverMult& q, std::size_t i, std::size_t j);
CartanData cartan(const QuiverMult& q);
// (v, w) = v^t D C w
std::int64_t bilinear(const QuiverMult& q, const DimVector& v, const DimVector& w);
std::int64_t expected_dim(const QuiverMult& q, const DimVector& v);

}  // namespace qs
