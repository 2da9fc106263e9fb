#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybfuse/exact/rational.hpp"

namespace ybfuse {

// Node of a Young diagram: (row x, column y), both 1-based.
struct Node {
  int row = 1;
  int col = 1;
  int content() const { return col - row; }
  friend auto operator<=>(const Node&, const Node&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // lambda_x with lambda_x = 0 beyond the length; x is 1-based.
  int part(int x) const;
  Partition conjugate() const;
  std::vector<Node> nodes() const;  // row by row
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

class StandardTableau {
 public:
  StandardTableau() = default;
  // Throws InvalidTableau unless a standard filling of a Young diagram.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  static StandardTableau row(int n);
  static StandardTableau column(int n);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  Node node_of(int entry) const { return nodes_[entry - 1]; }
  int entry(const Node& node) const { return rows_[node.row - 1][node.col - 1]; }
  // cc(T|i) = y - x of the node holding i.
  int content(int entry) const { return node_of(entry).content(); }
  std::vector<int> reading_word() const;
  std::string to_string() const;  // "[[1,3],[2]]"

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  // Reading words row by row, compared lexicographically.
  friend std::strong_ordering operator<=>(const StandardTableau& a,
                                          const StandardTableau& b) {
    return a.reading_word() <=> b.reading_word();
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Node> nodes_;
};

using ContentString = std::vector<Rational>;

// Classical contents when q is empty; q^{2 cc} otherwise.
ContentString content_string(const StandardTableau& t,
                             const std::optional<Rational>& q = std::nullopt);

// Throws InvalidDeformationParameter for q in {0, 1, -1}.
void check_deformation_parameter(const Rational& q);

std::map<Node, int> hook_lengths(const Partition& lambda);
// 1 / prod of hooks.
Rational f_lambda(const Partition& lambda);
// prod q^{cc} / [h], [N] = (q^N - q^-N)/(q - q^-1).
Rational f_q_lambda(const Partition& lambda, const Rational& q);
Rational quantum_integer(int n, const Rational& q);

std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

// T with k, k+1 swapped when that filling is standard.
std::optional<StandardTableau> admissible_transposition(
    const StandardTableau& t, int k);

std::uint64_t count_ssyt(const Partition& lambda, int N);
// Alphabet 1 < ... < N < 1' < ... < M'.
std::uint64_t count_hook_ssyt(const Partition& lambda, int N, int M);

}  // namespace ybfuse
