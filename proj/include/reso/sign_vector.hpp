#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace reso {

/// A vector in {-1,0,+1}^n, n <= 31, packed two bits per entry.
///
/// Entry i occupies bits 2*(n-1-i)..2*(n-1-i)+1 of the code with digit
/// value entry+1, so comparing codes of equal length is the entrywise
/// lexicographic order with -1 < 0 < +1.  Every canonical form in the
/// engine is defined in terms of this order.
class SignVector {
 public:
  static constexpr int kMaxLen = 31;

  SignVector() = default;
  static SignVector zero(int n) { return SignVector(n, zero_code(n)); }
  static SignVector from_entries(const std::vector<int>& entries);
  // idx is a base-3 odometer over [0, 3^n), entry 0 most significant.
  static SignVector from_index(int n, std::uint64_t idx);

  int size() const { return n_; }
  int at(int i) const { return static_cast<int>((code_ >> shift(i)) & 3u) - 1; }
  std::uint64_t code() const { return code_; }

  bool is_zero() const { return code_ == zero_code(n_); }
  SignVector negated() const;
  std::vector<int> plus() const;   // 1-based indices of +1 entries
  std::vector<int> minus() const;  // 1-based indices of -1 entries

  // Entries selected by p: result[j] = at(p[j]).
  SignVector reindex(const std::vector<int>& p) const;
  long long dot(const std::vector<long long>& w) const;
  std::string str() const;  // "(1,-1,0)"

  friend bool operator==(const SignVector& a, const SignVector& b) = default;
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  SignVector(int n, std::uint64_t code) : n_(n), code_(code) {}
  int shift(int i) const { return 2 * (n_ - 1 - i); }
  static std::uint64_t zero_code(int n) {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i) c = (c << 2) | 1u;
    return c;
  }

  int n_ = 0;
  std::uint64_t code_ = 0;
};

std::uint64_t pow3(int n);

}  // namespace reso
