#include "reso/sign_vector.hpp"

#include "reso/errors.hpp"

namespace reso {

SignVector SignVector::from_entries(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  if (n > kMaxLen) throw ResourceError("sign vector length exceeds " + std::to_string(kMaxLen));
  std::uint64_t code = 0;
  for (int e : entries) {
    if (e < -1 || e > 1) throw ParseError("sign vector entries must be in {-1,0,1}");
    code = (code << 2) | static_cast<std::uint64_t>(e + 1);
  }
  return SignVector(n, code);
}

SignVector SignVector::from_index(int n, std::uint64_t idx) {
  std::uint64_t code = 0;
  for (int i = n - 1; i >= 0; --i) {
    code |= (idx % 3) << (2 * (n - 1 - i));
    idx /= 3;
  }
  return SignVector(n, code);
}

SignVector SignVector::negated() const {
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i)
    code |= static_cast<std::uint64_t>(2 - ((code_ >> shift(i)) & 3u)) << shift(i);
  return SignVector(n_, code);
}

std::vector<int> SignVector::plus() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (at(i) == 1) out.push_back(i + 1);
  return out;
}

std::vector<int> SignVector::minus() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (at(i) == -1) out.push_back(i + 1);
  return out;
}

SignVector SignVector::reindex(const std::vector<int>& p) const {
  std::vector<int> entries(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) entries[j] = at(p[j]);
  return from_entries(entries);
}

long long SignVector::dot(const std::vector<long long>& w) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i) s += at(i) * w[i];
  return s;
}

std::string SignVector::str() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(at(i));
  }
  return s + ")";
}

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

}  // namespace reso
