#include "qchroma/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qchroma {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition part must be >= 1");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (total_ > 63) throw std::invalid_argument("composition size exceeds 63");
}

std::uint64_t set_of(const Composition& a) {
  std::uint64_t mask = 0;
  int s = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    s += a.part(i);
    mask |= 1ull << (s - 1);
  }
  return mask;
}

Composition comp_of(int n, std::uint64_t set_mask) {
  if (n < 0 || n > 63) throw std::invalid_argument("comp_of: n out of range");
  if (n == 0) {
    if (set_mask) throw std::invalid_argument("comp_of: set element outside [n-1]");
    return Composition{};
  }
  if (n >= 1 && (set_mask >> (n - 1)) != 0)
    throw std::invalid_argument("comp_of: set element outside [n-1]");
  std::vector<int> parts;
  int prev = 0;
  for (int s = 1; s < n; ++s)
    if (set_mask & (1ull << (s - 1))) {
      parts.push_back(s - prev);
      prev = s;
    }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition reversal(const Composition& a) {
  std::vector<int> p(a.parts().rbegin(), a.parts().rend());
  return Composition(std::move(p));
}

Composition complement(const Composition& a) {
  int n = a.total();
  if (n == 0) return a;
  std::uint64_t full = (n == 1) ? 0 : ((1ull << (n - 1)) - 1);
  return comp_of(n, full & ~set_of(a));
}

Composition transpose(const Composition& a) { return complement(reversal(a)); }

bool refines(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) throw std::invalid_argument("refines: size mismatch");
  std::uint64_t sa = set_of(a), sb = set_of(b);
  return (sb & ~sa) == 0;
}

Composition meet(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) throw std::invalid_argument("meet: size mismatch");
  return comp_of(a.total(), set_of(a) | set_of(b));
}

std::vector<Composition> gamma(const Composition& a, const Composition& b) {
  Composition m = meet(a, b);
  std::vector<Composition> blocks;
  blocks.reserve(b.length());
  int idx = 0;
  for (int i = 0; i < b.length(); ++i) {
    std::vector<int> blk;
    int need = b.part(i);
    while (need > 0) {
      blk.push_back(m.part(idx));
      need -= m.part(idx);
      ++idx;
    }
    blocks.emplace_back(std::move(blk));
  }
  return blocks;
}

long long eta(const Composition& a) {
  long long s = 0, acc = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    acc += a.part(i);
    s += acc;
  }
  return s;
}

long long eta_gamma(const Composition& a, const Composition& b) {
  long long s = 0;
  for (const Composition& blk : gamma(a, b)) s += eta(blk);
  return s;
}

std::vector<int> lambda_of(const Composition& a) {
  std::vector<int> p = a.parts();
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

long long z_of(const Composition& a) {
  std::vector<int> lam = lambda_of(a);
  long long z = 1;
  for (std::size_t i = 0; i < lam.size();) {
    std::size_t j = i;
    while (j < lam.size() && lam[j] == lam[i]) ++j;
    long long mult = static_cast<long long>(j - i);
    for (long long k = 2; k <= mult; ++k) z *= k;
    for (long long k = 0; k < mult; ++k) z *= lam[i];
    i = j;
  }
  return z;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_compositions: n must be >= 1");
  std::uint64_t count = 1ull << (n - 1);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(comp_of(n, mask));
  return out;
}

std::string to_string(const Composition& a) {
  std::string s = "(";
  for (int i = 0; i < a.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.part(i));
  }
  s += ")";
  return s;
}

Composition parse_composition(std::string_view text) {
  std::string_view t = text;
  auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ')) v.remove_suffix(1);
    return v;
  };
  t = strip(t);
  if (!t.empty() && t.front() == '(' && t.back() == ')') {
    t.remove_prefix(1);
    t.remove_suffix(1);
  }
  t = strip(t);
  std::vector<int> parts;
  if (t.empty()) return Composition{};
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string_view tok = strip(t.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos));
    if (tok.empty()) throw std::invalid_argument("parse_composition: empty part");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("parse_composition: bad digit");
      v = v * 10 + (c - '0');
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

}  // namespace qchroma
