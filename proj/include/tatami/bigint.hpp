#pragma once

// Unsigned arbitrary-precision integer on base-2^32 limbs. Just enough
// arithmetic for exact counting recurrences: add, multiply, compare,
// decimal I/O. Limbs are little-endian with no trailing zeros.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatami {

class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {
    if (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
  }

  static BigUint from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigUint: empty string");
    BigUint out;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("BigUint: bad digit");
      out.mul_small(10);
      out.add_small(static_cast<std::uint32_t>(ch - '0'));
    }
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t sum = carry + limbs_[i];
      if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(sum);
      carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = out.limbs_[i + j] +
                            static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t pos = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = out.limbs_[pos] + carry;
        out.limbs_[pos] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++pos;
      }
    }
    out.trim();
    return out;
  }

  BigUint& operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
  }
  friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      // divide by 1e9, collect remainder as nine digits
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      for (int d = 0; d < 9; ++d) {
        out.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
  }

  double to_double() const {
    double out = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) out = out * 4294967296.0 + limbs_[i];
    return out;
  }

  std::uint64_t to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint: does not fit in 64 bits");
    std::uint64_t out = 0;
    if (limbs_.size() > 1) out = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) out |= limbs_[0];
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigUint& v) {
    return os << v.to_string();
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  void mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  void add_small(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
      std::uint64_t cur = limbs_[i] + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace tatami
