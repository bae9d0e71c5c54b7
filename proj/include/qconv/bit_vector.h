// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QCONV_BIT_VECTOR_H
#define QCONV_BIT_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qconv {

/// Fixed-length packed bit vector. Bits beyond size() in the last word are
/// always zero, so word-level popcounts never need masking.
class BitVector {
 public:
  using Word = uint64_t;
  static constexpr size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(size_t num_bits);

  size_t size() const { return num_bits_; }
  size_t num_words() const { return words_.size(); }

  bool get(size_t k) const { return (words_[k / kWordBits] >> (k % kWordBits)) & 1U; }
  void set(size_t k, bool value);
  void flip(size_t k) { words_[k / kWordBits] ^= Word{1} << (k % kWordBits); }
  void clear();

  size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Parity of popcount(a & b).
  static bool and_parity(const BitVector& a, const BitVector& b);

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector& other) const = default;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// "0101..." with bit 0 first.
  std::string str() const;

 private:
  size_t num_bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace qconv

#endif  // QCONV_BIT_VECTOR_H
