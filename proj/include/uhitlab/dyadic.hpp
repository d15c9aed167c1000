#ifndef UHITLAB_DYADIC_HPP
#define UHITLAB_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uhitlab {

// Unbounded unsigned integer, little-endian 64-bit limbs with no leading
// zero limb. Only the handful of operations the dyadic arithmetic needs.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }

  BigUint& operator+=(const BigUint& other);
  BigUint shifted_left(unsigned bits) const;
  BigUint shifted_right_one() const;

  std::strong_ordering operator<=>(const BigUint& other) const;
  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }

  std::string to_decimal() const;

 private:
  std::vector<std::uint64_t> limbs_;
};

// Exact nonnegative dyadic rational numerator / 2^exponent, kept in lowest
// terms. The unsatisfiability criterion is an exact equality, so no
// floating point is used anywhere.
class DyadicSum {
 public:
  DyadicSum() = default;  // zero
  // value = numerator / 2^exponent
  DyadicSum(std::uint64_t numerator, unsigned exponent);

  static DyadicSum zero() { return DyadicSum(); }
  static DyadicSum one() { return DyadicSum(1, 0); }
  // 2^-k
  static DyadicSum power_of_two_inverse(unsigned k) { return DyadicSum(1, k); }

  const BigUint& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_one() const { return numerator_.is_one() && exponent_ == 0; }

  DyadicSum& operator+=(const DyadicSum& other);
  DyadicSum operator+(const DyadicSum& other) const;

  std::strong_ordering operator<=>(const DyadicSum& other) const;
  bool operator==(const DyadicSum& other) const = default;

  std::string to_string() const;  // "num/2^exp" in lowest terms

 private:
  void normalize();

  BigUint numerator_;
  unsigned exponent_ = 0;
};

}  // namespace uhitlab

#endif
