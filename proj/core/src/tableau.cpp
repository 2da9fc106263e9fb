#include "ybfuse/combinatorics/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ybfuse/error.hpp"

namespace ybfuse {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InvalidArgument("parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int x) const {
  return x >= 1 && x <= length() ? parts_[x - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int y = 1; y <= part(1); ++y) {
    int len = 0;
    while (part(len + 1) >= y) ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

std::vector<Node> Partition::nodes() const {
  std::vector<Node> out;
  for (int x = 1; x <= length(); ++x) {
    for (int y = 1; y <= parts_[x - 1]; ++y) out.push_back({x, y});
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    os << (i ? "," : "") << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  StandardTableau t;
  try {
    t.shape_ = Partition(parts);
  } catch (const InvalidArgument&) {
    throw InvalidTableau("rows do not form a Young diagram");
  }
  const int n = t.shape_.size();
  t.nodes_.assign(static_cast<std::size_t>(n), Node{});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < rows[x].size(); ++y) {
      int v = rows[x][y];
      if (v < 1 || v > n || seen[v - 1]) {
        throw InvalidTableau("entries must be a bijection onto 1..n");
      }
      seen[v - 1] = true;
      t.nodes_[v - 1] = Node{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
      if (y > 0 && rows[x][y - 1] >= v) {
        throw InvalidTableau("rows must increase");
      }
      if (x > 0 && rows[x - 1][y] >= v) {
        throw InvalidTableau("columns must increase");
      }
    }
  }
  t.rows_ = std::move(rows);
  return t;
}

StandardTableau StandardTableau::row(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return from_rows({r});
}

StandardTableau StandardTableau::column(int n) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) rows.push_back({i});
  return from_rows(rows);
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    os << (x ? "," : "") << "[";
    for (std::size_t y = 0; y < rows_[x].size(); ++y) {
      os << (y ? "," : "") << rows_[x][y];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

void check_deformation_parameter(const Rational& q) {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1)) {
    throw InvalidDeformationParameter("q must not be 0, 1 or -1");
  }
}

ContentString content_string(const StandardTableau& t,
                             const std::optional<Rational>& q) {
  if (q) check_deformation_parameter(*q);
  ContentString out;
  for (int i = 1; i <= t.size(); ++i) {
    int cc = t.content(i);
    out.push_back(q ? q->pow(2L * cc) : Rational(cc));
  }
  return out;
}

std::map<Node, int> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::map<Node, int> h;
  for (const Node& n : lambda.nodes()) {
    h[n] = (lambda.part(n.row) - n.col) + (conj.part(n.col) - n.row) + 1;
  }
  return h;
}

Rational f_lambda(const Partition& lambda) {
  Rational prod(1);
  for (const auto& [node, h] : hook_lengths(lambda)) prod *= Rational(h);
  return prod.inverse();
}

Rational quantum_integer(int n, const Rational& q) {
  return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

Rational f_q_lambda(const Partition& lambda, const Rational& q) {
  check_deformation_parameter(q);
  Rational prod(1);
  for (const auto& [node, h] : hook_lengths(lambda)) {
    prod *= q.pow(node.content()) / quantum_integer(h, q);
  }
  return prod;
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::vector<int>> rows;
  rows.resize(lambda.parts().size());
  std::vector<StandardTableau> out;
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.push_back(StandardTableau::from_rows(rows));
      return;
    }
    for (std::size_t x = 0; x < rows.size(); ++x) {
      const int len = static_cast<int>(rows[x].size());
      if (len >= lambda.parts()[x]) continue;
      if (x > 0 && static_cast<int>(rows[x - 1].size()) <= len) continue;
      rows[x].push_back(v);
      place(v + 1);
      rows[x].pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<StandardTableau> admissible_transposition(
    const StandardTableau& t, int k) {
  if (k < 1 || k >= t.size()) {
    throw InvalidArgument("transposition index out of range");
  }
  auto rows = t.rows();
  Node a = t.node_of(k), b = t.node_of(k + 1);
  rows[a.row - 1][a.col - 1] = k + 1;
  rows[b.row - 1][b.col - 1] = k;
  try {
    return StandardTableau::from_rows(std::move(rows));
  } catch (const InvalidTableau&) {
    return std::nullopt;
  }
}

namespace {

// Counts fillings cell by cell (row-major); ok(v, left, up) decides a value
// given its already-filled neighbours (0 for none).
template <class Ok>
std::uint64_t count_fillings(const Partition& lambda, int alphabet, Ok ok) {
  const auto nodes = lambda.nodes();
  std::vector<std::vector<int>> grid;
  for (int p : lambda.parts()) grid.emplace_back(static_cast<std::size_t>(p), 0);
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t k) {
    if (k == nodes.size()) return std::uint64_t{1};
    const Node& nd = nodes[k];
    int left = nd.col > 1 ? grid[nd.row - 1][nd.col - 2] : 0;
    int up = nd.row > 1 ? grid[nd.row - 2][nd.col - 1] : 0;
    std::uint64_t total = 0;
    for (int v = std::max({1, left, up}); v <= alphabet; ++v) {
      if (!ok(v, left, up)) continue;
      grid[nd.row - 1][nd.col - 1] = v;
      total += rec(k + 1);
    }
    grid[nd.row - 1][nd.col - 1] = 0;
    return total;
  };
  return rec(0);
}

}  // namespace

std::uint64_t count_ssyt(const Partition& lambda, int N) {
  if (lambda.length() > N) return 0;
  return count_fillings(lambda, N, [](int v, int, int up) { return v > up; });
}

std::uint64_t count_hook_ssyt(const Partition& lambda, int N, int M) {
  if (N + M < 1) throw InvalidArgument("N + M must be positive");
  return count_fillings(lambda, N + M, [N](int v, int left, int up) {
    // Primed letters: strict along rows, weak down columns.
    return v > N ? v > left : v > up;
  });
}

}  // namespace ybfuse
