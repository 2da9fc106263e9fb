#include "ybfuse/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ybfuse/error.hpp"

namespace ybfuse {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  Permutation p;
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw InvalidArgument("not a permutation");
    }
    seen[v - 1] = true;
    p.images_.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw InvalidArgument("bad transposition");
  }
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::cycle(int n, std::initializer_list<int> points) {
  Permutation p = identity(n);
  std::vector<int> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int from = pts[k];
    int to = pts[(k + 1) % pts.size()];
    if (from < 1 || from > n || to < 1 || to > n) {
      throw InvalidArgument("cycle point out of range");
    }
    p.images_[from - 1] = static_cast<std::uint8_t>(to - 1);
  }
  return from_images(p.images());
}

Permutation Permutation::longest(int n) {
  Permutation p;
  for (int i = n; i >= 1; --i) p.images_.push_back(static_cast<std::uint8_t>(i - 1));
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw SizeMismatch("permutation sizes differ");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    p.images_[k] = images_[o.images_[k]];
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    p.images_[images_[k]] = static_cast<std::uint8_t>(k);
  }
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      inv += images_[a] > images_[b] ? 1 : 0;
    }
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel left descents: if i+1 precedes i in one-line form then
  // l(s_i p) < l(p) and p = s_i (s_i p).
  std::vector<int> word;
  std::vector<std::uint8_t> w = images_;
  std::vector<std::size_t> pos(w.size());
  for (bool found = true; found;) {
    found = false;
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = k;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (pos[i + 1] < pos[i]) {
        word.push_back(static_cast<int>(i) + 1);
        std::swap(w[pos[i]], w[pos[i + 1]]);
        found = true;
        break;
      }
    }
  }
  return word;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += "(";
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) out += ",";
      out += std::to_string(k + 1);
      first = false;
      k = images_[k];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace ybfuse
