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


#include "qconv/bit_vector.h"

#include <bit>
#include <stdexcept>

namespace qconv {

BitVector::BitVector(size_t num_bits)
    : num_bits_(num_bits), words_((num_bits + kWordBits - 1) / kWordBits, 0) {}

void BitVector::set(size_t k, bool value) {
  Word mask = Word{1} << (k % kWordBits);
  if (value) {
    words_[k / kWordBits] |= mask;
  } else {
    words_[k / kWordBits] &= ~mask;
  }
}

void BitVector::clear() {
  for (Word& w : words_) w = 0;
}

size_t BitVector::popcount() const {
  size_t total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::any() const {
  for (Word w : words_) {
    if (w) return true;
  }
  return false;
}

bool BitVector::and_parity(const BitVector& a, const BitVector& b) {
  if (a.num_bits_ != b.num_bits_) {
    throw std::invalid_argument("BitVector length mismatch: " + std::to_string(a.num_bits_) +
                                " vs " + std::to_string(b.num_bits_));
  }
  Word acc = 0;
  for (size_t k = 0; k < a.words_.size(); k++) acc ^= a.words_[k] & b.words_[k];
  return std::popcount(acc) & 1;
}

static void check_same_size(size_t a, size_t b) {
  if (a != b) {
    throw std::invalid_argument("BitVector length mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(num_bits_, other.num_bits_);
  for (size_t k = 0; k < words_.size(); k++) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(num_bits_, other.num_bits_);
  for (size_t k = 0; k < words_.size(); k++) words_[k] &= other.words_[k];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(num_bits_, other.num_bits_);
  for (size_t k = 0; k < words_.size(); k++) words_[k] |= other.words_[k];
  return *this;
}

std::string BitVector::str() const {
  std::string out(num_bits_, '0');
  for (size_t k = 0; k < num_bits_; k++) {
    if (get(k)) out[k] = '1';
  }
  return out;
}

}  // namespace qconv
