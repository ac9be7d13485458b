#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qchroma {

// Composition of n into positive parts. The empty composition stands for n=0.
// Subsets of [n-1] are bitmasks: bit (s-1) holds element s; requires n <= 63.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  int part(int i) const { return parts_[i]; }  // 0-based

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// set(alpha) = {a1, a1+a2, ..., a1+...+a_{l-1}} as a bitmask subset of [n-1].
std::uint64_t set_of(const Composition& a);
Composition comp_of(int n, std::uint64_t set_mask);

Composition reversal(const Composition& a);
Composition complement(const Composition& a);
Composition transpose(const Composition& a);

// refines(a,b) <=> set(b) subset of set(a). Both must have equal size.
bool refines(const Composition& a, const Composition& b);
Composition meet(const Composition& a, const Composition& b);

// Splits meet(a,b) into consecutive blocks of sizes b_1, ..., b_l.
std::vector<Composition> gamma(const Composition& a, const Composition& b);

// eta(alpha) = sum over i < l of (a_1 + ... + a_i) = sum of set(alpha).
long long eta(const Composition& a);
long long eta_gamma(const Composition& a, const Composition& b);

std::vector<int> lambda_of(const Composition& a);  // parts sorted decreasing
long long z_of(const Composition& a);

// All 2^(n-1) compositions of n, ascending by set_of bitmask.
std::vector<Composition> enumerate_compositions(int n);

std::string to_string(const Composition& a);  // "(1,4,1,2)"
Composition parse_composition(std::string_view text);

}  // namespace qchroma
