#include "reso/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "reso/errors.hpp"

namespace reso {

NumberPartition::NumberPartition(std::vector<long long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParseError("number partition must have at least one part");
  for (long long p : parts_)
    if (p < 1) throw ParseError("number partition parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

long long NumberPartition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string NumberPartition::str() const {
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    const long long v = *it;
    int mult = 0;
    while (it != parts_.rend() && *it == v) ++it, ++mult;
    if (!out.empty()) out += ',';
    out += std::to_string(v);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

std::vector<long long> parse_weight_vector(const std::string& text) {
  std::vector<long long> out;
  std::size_t i = 0;
  auto parse_int = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected integer in weight list at position " + std::to_string(start));
    return std::stoll(text.substr(start, i - start));
  };
  while (i < text.size()) {
    const long long base = parse_int();
    long long mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = parse_int();
    }
    if (base < 1 || mult < 1) throw ParseError("weights and multiplicities must be positive");
    for (long long k = 0; k < mult; ++k) out.push_back(base);
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ',' in weight list");
      ++i;
      if (i == text.size()) throw ParseError("trailing ',' in weight list");
    }
  }
  if (out.empty()) throw ParseError("empty weight list");
  return out;
}

NumberPartition parse_weights(const std::string& text) {
  return NumberPartition(parse_weight_vector(text));
}

namespace {

void check_blocks(int n, const std::vector<std::vector<int>>& blocks, bool require_disjoint_cover) {
  if (n < 1) throw ParseError("ground size must be positive");
  std::vector<int> seen(n + 1, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw ParseError("blocks must be non-empty");
    for (int e : b) {
      if (e < 1 || e > n) throw ParseError("block element out of range");
      ++seen[e];
    }
  }
  if (require_disjoint_cover)
    for (int e = 1; e <= n; ++e)
      if (seen[e] != 1) throw ParseError("blocks must partition [n]");
}

void canonicalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

std::string blocks_str(const std::vector<std::vector<int>>& blocks, char open, char close,
                       const char* sep) {
  std::string out;
  bool first_block = true;
  for (const auto& b : blocks) {
    if (!first_block) out += sep;
    first_block = false;
    out += open;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += close;
  }
  return out;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  check_blocks(n_, blocks_, true);
  canonicalize(blocks_);
}

SetPartition SetPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int e = 1; e <= n; ++e) blocks.push_back({e});
  return SetPartition(n, std::move(blocks));
}

int SetPartition::block_of(int element) const {
  for (int i = 0; i < block_count(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element)) return i;
  throw InvariantError("element not covered by partition");
}

std::string SetPartition::str() const { return blocks_str(blocks_, '{', '}', ""); }

OrderedSetPartition::OrderedSetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  check_blocks(n_, blocks_, true);
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
}

OrderedSetPartition OrderedSetPartition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  for (int e = 1; e <= n; ++e) blocks.push_back({e});
  return OrderedSetPartition(n, std::move(blocks));
}

SetPartition OrderedSetPartition::unorder() const { return SetPartition(n_, blocks_); }

std::string OrderedSetPartition::str() const {
  return "(" + blocks_str(blocks_, '{', '}', ",") + ")";
}

MultisetFamily::MultisetFamily(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  check_blocks(n_, blocks_, false);
  canonicalize(blocks_);
}

MultisetFamily MultisetFamily::from_partition(const SetPartition& pi) {
  return MultisetFamily(pi.ground_size(), pi.blocks());
}

bool MultisetFamily::is_partition() const {
  std::vector<int> seen(n_ + 1, 0);
  for (const auto& b : blocks_)
    for (int e : b) ++seen[e];
  for (int e = 1; e <= n_; ++e)
    if (seen[e] != 1) return false;
  return true;
}

SetPartition MultisetFamily::as_partition() const { return SetPartition(n_, blocks_); }

std::size_t MultisetFamily::total_size() const {
  std::size_t s = 0;
  for (const auto& b : blocks_) s += b.size();
  return s;
}

std::string MultisetFamily::str() const { return blocks_str(blocks_, '{', '}', ""); }

OrderedSetPartition compose(const OrderedSetPartition& pi, const OrderedSetPartition& nu) {
  if (pi.ground_size() != nu.block_count())
    throw ParseError("compose: pi's ground size must equal nu's block count");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pi.block_count());
  for (const auto& part : pi.blocks()) {
    std::vector<int> merged;
    for (int j : part) {
      const auto& nb = nu.blocks()[j - 1];
      merged.insert(merged.end(), nb.begin(), nb.end());
    }
    blocks.push_back(std::move(merged));
  }
  return OrderedSetPartition(nu.ground_size(), std::move(blocks));
}

std::vector<std::vector<int>> trace_blocks(const SetPartition& pi, const std::vector<int>& a) {
  if (a.empty()) throw ParseError("restriction to empty set");
  for (int e : a)
    if (e < 1 || e > pi.ground_size()) throw ParseError("restriction set not inside ground set");
  std::vector<std::vector<int>> out;
  for (const auto& b : pi.blocks()) {
    std::vector<int> t;
    for (int e : b)
      if (std::find(a.begin(), a.end(), e) != a.end()) t.push_back(e);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

SetPartition restrict_to(const SetPartition& pi, const std::vector<int>& a) {
  std::vector<int> sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());
  auto traces = trace_blocks(pi, sorted_a);
  for (auto& b : traces)
    for (int& e : b)
      e = static_cast<int>(std::lower_bound(sorted_a.begin(), sorted_a.end(), e) -
                           sorted_a.begin()) +
          1;
  return SetPartition(static_cast<int>(sorted_a.size()), std::move(traces));
}

std::vector<SetPartition> product_set(const std::vector<SetPartition>& pi_set,
                                      const std::vector<int>& a,
                                      const std::vector<SetPartition>& lambda_set,
                                      const std::vector<int>& b, int enumeration_bound) {
  std::vector<int> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  const int n = static_cast<int>(all.size());
  for (int e = 1; e <= n; ++e)
    if (all[e - 1] != e) throw ParseError("product_set: ground sets must be disjoint and cover [n]");

  std::vector<SetPartition> out;
  if (pi_set.empty() || lambda_set.empty()) return out;
  for (const auto& pi : enumerate_partitions(n, enumeration_bound)) {
    if (std::find(pi_set.begin(), pi_set.end(), restrict_to(pi, a)) == pi_set.end()) continue;
    if (std::find(lambda_set.begin(), lambda_set.end(), restrict_to(pi, b)) == lambda_set.end())
      continue;
    out.push_back(pi);
  }
  return out;
}

std::vector<SetPartition> enumerate_partitions(int n, int bound) {
  if (n < 1) throw ParseError("n must be positive");
  if (n > bound)
    throw ResourceError("partition enumeration bound exceeded: n=" + std::to_string(n) +
                        " > " + std::to_string(bound));
  // Restricted growth strings.
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(k);
    for (int e = 1; e <= n; ++e) blocks[rgs[e - 1]].push_back(e);
    out.emplace_back(n, std::move(blocks));
    int i = n - 1;
    for (; i > 0; --i) {
      const int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<OrderedSetPartition> enumerate_ordered(int n, int bound) {
  std::vector<OrderedSetPartition> out;
  for (const auto& pi : enumerate_partitions(n, bound)) {
    std::vector<int> order(pi.block_count());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::vector<int>> blocks;
      for (int i : order) blocks.push_back(pi.blocks()[i]);
      out.emplace_back(n, std::move(blocks));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> parse_block_list(const std::string& text, std::size_t& i,
                                               char until) {
  std::vector<std::vector<int>> blocks;
  while (i < text.size() && text[i] != until) {
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] != '{') throw ParseError("expected '{' in partition at position " + std::to_string(i));
    ++i;
    std::vector<int> block;
    while (i < text.size() && text[i] != '}') {
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected element in partition block");
      block.push_back(std::stoi(text.substr(start, i - start)));
    }
    if (i == text.size()) throw ParseError("unterminated block");
    ++i;  // '}'
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int ground_of(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, e);
  return n;
}

}  // namespace

SetPartition parse_set_partition(const std::string& text) {
  std::size_t i = 0;
  auto blocks = parse_block_list(text, i, '\0');
  if (i != text.size()) throw ParseError("trailing characters after partition");
  const int n = ground_of(blocks);
  return SetPartition(n, std::move(blocks));
}

OrderedSetPartition parse_ordered_partition(const std::string& text) {
  if (text.empty() || text.front() != '(' || text.back() != ')')
    throw ParseError("ordered partition must be wrapped in parentheses");
  std::size_t i = 1;
  auto blocks = parse_block_list(text, i, ')');
  if (i != text.size() - 1) throw ParseError("trailing characters in ordered partition");
  const int n = ground_of(blocks);
  return OrderedSetPartition(n, std::move(blocks));
}

SetPartition relabel(const SetPartition& pi, const std::vector<int>& sigma) {
  auto blocks = pi.blocks();
  for (auto& b : blocks)
    for (int& e : b) e = sigma[e - 1] + 1;
  return SetPartition(pi.ground_size(), std::move(blocks));
}

}  // namespace reso
