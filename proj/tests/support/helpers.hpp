#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qs/quiver.hpp"
#include "qs/repn.hpp"
#include "qs/trunc.hpp"

namespace testing_support {

inline std::string corpus_dir() { return QS_CORPUS_DIR; }

inline qs::QuiverPtr make_quiver(const std::string& text) {
  return std::make_shared<const qs::QuiverMult>(qs::parse_quiver(text));
}

inline qs::TruncScalar ts(std::vector<long> coeffs) {
  std::vector<qs::GaussQ> out;
  for (long c : coeffs) out.emplace_back(c);
  return qs::TruncScalar(std::move(out));
}

inline qs::QMatrix qm(std::size_t rows, std::size_t cols, std::vector<long> entries) {
  qs::QMatrix out(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) out(k / cols, k % cols) = entries[k];
  return out;
}

// chain j - i - k with multiplicities (dj, di, 1), declared in order i, j, k
inline qs::QuiverPtr three_chain(int di, int dj) {
  return make_quiver("quiver { vertex i mult " + std::to_string(di) + " vertex j mult " + std::to_string(dj) +
                     " vertex k mult 1 arrow a : j -> i arrow b : i -> k }");
}

// leg [1] ... [l] of multiplicity d hanging off [0], then a tail of n mult-1 vertices
inline qs::QuiverPtr leg_chain(int d, int l, int tail) {
  std::string text = "quiver {";
  for (int p = l; p >= 1; --p) text += " vertex l" + std::to_string(p) + " mult " + std::to_string(d);
  text += " vertex l0 mult 1";
  for (int t = 1; t <= tail; ++t) text += " vertex c" + std::to_string(t) + " mult 1";
  for (int p = l; p >= 1; --p) text += " arrow e" + std::to_string(p) + " : l" + std::to_string(p) + " -> l" + std::to_string(p - 1);
  std::string prev = "l0";
  for (int t = 1; t <= tail; ++t) {
    text += " arrow t" + std::to_string(t) + " : " + prev + " -> c" + std::to_string(t);
    prev = "c" + std::to_string(t);
  }
  return make_quiver(text + " }");
}

// multiplicities d, 1, ..., 1, d along a chain of n >= 4 vertices
inline qs::QuiverPtr two_tail_chain(int d, int n) {
  std::string text = "quiver {";
  for (int p = 0; p < n; ++p) {
    const bool end = p == 0 || p == n - 1;
    text += " vertex x" + std::to_string(p) + " mult " + std::to_string(end ? d : 1);
  }
  for (int p = 0; p + 1 < n; ++p) {
    text += " arrow y" + std::to_string(p) + " : x" + std::to_string(p) + " -> x" + std::to_string(p + 1);
  }
  return make_quiver(text + " }");
}

}  // namespace testing_support
