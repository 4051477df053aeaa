#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alextop {

/// Unsigned arbitrary-precision integer; just enough arithmetic for Bell
/// numbers and binomial tables (add, multiply, compare, decimal output).
class BigUint {
 public:
  BigUint() = default;
  BigUint(uint64_t v);  // NOLINT: implicit by design

  BigUint& operator+=(const BigUint& o);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator*(const BigUint& a, const BigUint& b);

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return !(*this == o); }
  bool operator<(const BigUint& o) const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;  // throws std::overflow_error if too large

  std::string str() const;

 private:
  void trim();
  std::vector<uint32_t> limbs_;  // base 2^32, little-endian, no trailing zeros
};

}  // namespace alextop
