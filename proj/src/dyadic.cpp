#include "uhitlab/dyadic.hpp"

#include <algorithm>

namespace uhitlab {

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigUint& BigUint::operator+=(const BigUint& other) {
  if (other.limbs_.size() > limbs_.size())
    limbs_.resize(other.limbs_.size(), 0);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    unsigned __int128 sum = carry + limbs_[i];
    if (i < other.limbs_.size()) sum += other.limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(sum);
    carry = sum >> 64;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

BigUint BigUint::shifted_left(unsigned bits) const {
  if (is_zero() || bits == 0) {
    BigUint out = *this;
    return out;
  }
  unsigned limb_shift = bits / 64;
  unsigned bit_shift = bits % 64;
  BigUint out;
  out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i + limb_shift] |= bit_shift == 0 ? limbs_[i]
                                                 : (limbs_[i] << bit_shift);
    if (bit_shift != 0)
      out.limbs_[i + limb_shift + 1] |= limbs_[i] >> (64 - bit_shift);
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

BigUint BigUint::shifted_right_one() const {
  BigUint out;
  out.limbs_.assign(limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i] = limbs_[i] >> 1;
    if (i + 1 < limbs_.size() && (limbs_[i + 1] & 1) != 0)
      out.limbs_[i] |= std::uint64_t{1} << 63;
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() <=> other.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint64_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<std::uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

DyadicSum::DyadicSum(std::uint64_t numerator, unsigned exponent)
    : numerator_(numerator), exponent_(exponent) {
  normalize();
}

void DyadicSum::normalize() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && numerator_.is_even()) {
    numerator_ = numerator_.shifted_right_one();
    --exponent_;
  }
}

DyadicSum& DyadicSum::operator+=(const DyadicSum& other) {
  if (other.is_zero()) return *this;
  unsigned exp = std::max(exponent_, other.exponent_);
  BigUint a = numerator_.shifted_left(exp - exponent_);
  a += other.numerator_.shifted_left(exp - other.exponent_);
  numerator_ = std::move(a);
  exponent_ = exp;
  normalize();
  return *this;
}

DyadicSum DyadicSum::operator+(const DyadicSum& other) const {
  DyadicSum out = *this;
  out += other;
  return out;
}

std::strong_ordering DyadicSum::operator<=>(const DyadicSum& other) const {
  // a/2^ea vs b/2^eb  <=>  a*2^(e-ea) vs b*2^(e-eb), e = max(ea, eb)
  unsigned exp = std::max(exponent_, other.exponent_);
  return numerator_.shifted_left(exp - exponent_) <=>
         other.numerator_.shifted_left(exp - other.exponent_);
}

std::string DyadicSum::to_string() const {
  if (exponent_ == 0) return numerator_.to_decimal();
  return numerator_.to_decimal() + "/2^" + std::to_string(exponent_);
}

}  // namespace uhitlab
