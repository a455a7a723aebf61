#include "monokit/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "monokit/errors.hpp"

namespace monokit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw Error(ErrorKind::InvalidInput, "image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(static_cast<size_t>(degree), false);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int p = c[k];
      if (p < 0 || p >= degree || used[p])
        throw Error(ErrorKind::InvalidInput, "cycles must be disjoint and within the degree");
      used[p] = true;
      im[p] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw Error(ErrorKind::ParseError, "expected point or ')' at position " + std::to_string(i));
      cyc.push_back(std::stoi(text.substr(start, i - start)));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw Error(ErrorKind::InvalidInput, "degree mismatch in product");
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation acc = identity(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::int64_t Permutation::order() const {
  std::int64_t l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, static_cast<std::int64_t>(c.size()));
  return l;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_full_cycle() const {
  if (degree() <= 1) return true;
  auto c = cycles();
  return c.size() == 1 && static_cast<int>(c.front().size()) == degree();
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

}  // namespace monokit
