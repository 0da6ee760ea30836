#include "banet/netcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace banet {

namespace {

constexpr int kWordBits = 64;

int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t tail_mask(int n) {
  const int rem = n % kWordBits;
  return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

// Projection masks: kVarMask[j] selects the truth-table positions whose j-th
// index bit is 0 (valid for j < 6, i.e. pairs inside one 64-bit word).
constexpr std::uint64_t kVarMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

bool table_depends_on(const std::vector<std::uint64_t>& table, int j) {
  if (j < 6) {
    const int step = 1 << j;
    for (std::uint64_t w : table) {
      if (((w >> step) ^ w) & kVarMask[j]) return true;
    }
    return false;
  }
  const std::size_t stride = std::size_t{1} << (j - 6);
  for (std::size_t base = 0; base < table.size(); base += 2 * stride) {
    for (std::size_t q = 0; q < stride; ++q) {
      if (table[base + q] != table[base + q + stride]) return true;
    }
  }
  return false;
}

}  // namespace

Ratio::Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Ratio::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Configuration::Configuration(int n) : n_(n) {
  if (n < 1 || n > kMaxSimulationSize) {
    throw CapacityError("configuration size must be in [1, " +
                        std::to_string(kMaxSimulationSize) + "], got " +
                        std::to_string(n));
  }
  words_.assign(word_count(n), 0);
}

Configuration::Configuration(int n, std::uint64_t code) : Configuration(n) {
  if (n > kWordBits) throw DomainError("code constructor limited to n <= 64");
  if (n < kWordBits && (code >> n) != 0) {
    throw DomainError("configuration code " + std::to_string(code) +
                      " does not fit in " + std::to_string(n) + " bits");
  }
  words_[0] = code;
}

Configuration Configuration::ones(int n) {
  Configuration x(n);
  for (auto& w : x.words_) w = ~std::uint64_t{0};
  x.words_.back() &= tail_mask(n);
  return x;
}

Configuration Configuration::unit(int n, int i) {
  Configuration x(n);
  x.check_index(i);
  x.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  return x;
}

Configuration Configuration::from_string(std::string_view text) {
  if (text.empty()) throw DomainError("empty configuration string");
  Configuration x(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      x.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    } else if (text[i] != '0') {
      throw DomainError("configuration strings use only '0' and '1'");
    }
  }
  return x;
}

void Configuration::check_index(int i) const {
  if (i < 0 || i >= n_) {
    throw DomainError("automaton index " + std::to_string(i) +
                      " out of range for size " + std::to_string(n_));
  }
}

bool Configuration::bit(int i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Configuration::set_bit(int i, bool value) {
  check_index(i);
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

int Configuration::weight() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::uint64_t Configuration::code() const {
  if (n_ > kWordBits) {
    throw CapacityError("configuration codes limited to n <= 64, got n = " +
                        std::to_string(n_));
  }
  return words_[0];
}

std::string Configuration::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((words_[i / kWordBits] >> (i % kWordBits)) & 1u) out[i] = '1';
  }
  return out;
}

Configuration& Configuration::operator^=(const Configuration& other) {
  if (other.n_ != n_) throw DomainError("configuration size mismatch in xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Configuration flip(const Configuration& x, const std::vector<int>& w) {
  Configuration out = x;
  std::vector<int> indices = w;
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices) out.set_bit(i, !out.bit(i));
  return out;
}

Ratio density(const Configuration& x) { return Ratio(x.weight(), x.size()); }

Configuration rotate(const Configuration& x, long long r) {
  const int n = x.size();
  const int shift = static_cast<int>(((r % n) + n) % n);
  if (shift == 0) return x;
  Configuration out(n);
  auto& dst = out.words_;
  const auto& src = x.words_;
  const int nw = static_cast<int>(src.size());
  // out = (x << shift) | (x >> (n - shift)), truncated to n bits.
  auto or_left = [&](int s) {
    const int ws = s / kWordBits, bs = s % kWordBits;
    for (int i = nw - 1; i >= 0; --i) {
      std::uint64_t v = 0;
      if (i - ws >= 0) v = src[i - ws] << bs;
      if (bs != 0 && i - ws - 1 >= 0) v |= src[i - ws - 1] >> (kWordBits - bs);
      dst[i] |= v;
    }
  };
  auto or_right = [&](int s) {
    const int ws = s / kWordBits, bs = s % kWordBits;
    for (int i = 0; i < nw; ++i) {
      std::uint64_t v = 0;
      if (i + ws < nw) v = src[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < nw) v |= src[i + ws + 1] << (kWordBits - bs);
      dst[i] |= v;
    }
  };
  or_left(shift);
  or_right(n - shift);
  dst.back() &= tail_mask(n);
  return out;
}

Configuration symmetric_conf(const Configuration& x, int i) {
  const int n = x.size();
  if (i < 0 || i >= n) {
    throw DomainError("mirror centre " + std::to_string(i) +
                      " out of range for size " + std::to_string(n));
  }
  Configuration out(n);
  for (int j = 0; j < n; ++j) {
    const int src = ((2 * i - j) % n + n) % n;
    if (x.bit(src)) out.set_bit(j, true);
  }
  return out;
}

bool dot_parity(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) throw DomainError("configuration size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < a.words().size(); ++w) {
    acc ^= a.words()[w] & b.words()[w];
  }
  return std::popcount(acc) & 1;
}

LocalFunction::LocalFunction(int n, std::vector<std::uint64_t> table_words)
    : n_(n), table_(std::move(table_words)) {
  if (n < 1 || n > kMaxTableSize) {
    throw CapacityError("truth tables limited to arity in [1, " +
                        std::to_string(kMaxTableSize) + "], got " +
                        std::to_string(n));
  }
  const std::size_t expected =
      n < 6 ? 1 : (std::size_t{1} << n) / kWordBits;
  if (table_.size() != expected) {
    throw DomainError("truth table has " + std::to_string(table_.size()) +
                      " words, expected " + std::to_string(expected) +
                      " for arity " + std::to_string(n));
  }
  if (n < 6) table_[0] &= (std::uint64_t{1} << (1 << n)) - 1;
  for (int j = 0; j < n_; ++j) {
    if (table_depends_on(table_, j)) support_.push_back(j);
  }
}

LocalFunction LocalFunction::from_bits(const std::vector<bool>& outputs) {
  const std::size_t len = outputs.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw DomainError("truth table length " + std::to_string(len) +
                      " is not a power of two");
  }
  return from_bits(std::countr_zero(len), outputs);
}

LocalFunction LocalFunction::from_bits(int n, const std::vector<bool>& outputs) {
  if (n < 1 || n > kMaxTableSize) {
    throw CapacityError("truth tables limited to arity in [1, " +
                        std::to_string(kMaxTableSize) + "], got " +
                        std::to_string(n));
  }
  if (outputs.size() != (std::size_t{1} << n)) {
    throw DomainError("truth table length " + std::to_string(outputs.size()) +
                      " does not match arity " + std::to_string(n));
  }
  std::vector<std::uint64_t> words(std::max<std::size_t>(1, outputs.size() / kWordBits), 0);
  for (std::size_t code = 0; code < outputs.size(); ++code) {
    if (outputs[code]) words[code / kWordBits] |= std::uint64_t{1} << (code % kWordBits);
  }
  return LocalFunction(n, std::move(words));
}

LocalFunction LocalFunction::constant(int n, bool value) {
  std::vector<bool> outputs(std::size_t{1} << n, value);
  return from_bits(n, outputs);
}

bool LocalFunction::eval(const Configuration& x) const {
  if (x.size() != n_) {
    throw DomainError("configuration size " + std::to_string(x.size()) +
                      " does not match function arity " + std::to_string(n_));
  }
  return eval(x.code());
}

std::vector<int> support_of(const LocalFunction& f) { return f.support(); }

Network::Network(std::vector<LocalFunction> functions)
    : n_(static_cast<int>(functions.size())), functions_(std::move(functions)) {
  if (functions_.empty()) throw DomainError("network needs at least one automaton");
  for (const auto& f : functions_) {
    if (f.arity() != n_) {
      throw DomainError("local function arity " + std::to_string(f.arity()) +
                        " does not match network size " + std::to_string(n_));
    }
  }
}

const LocalFunction& Network::function(int i) const {
  if (i < 0 || i >= n_) {
    throw DomainError("automaton index " + std::to_string(i) +
                      " out of range for size " + std::to_string(n_));
  }
  return functions_[static_cast<std::size_t>(i)];
}

bool InteractionGraph::has_arc(int from, int to) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(from, to));
}

InteractionGraph interaction_graph(const Network& net) {
  InteractionGraph g;
  g.n = net.size();
  for (int i = 0; i < net.size(); ++i) {
    for (int j : net.function(i).support()) g.arcs.emplace_back(j, i);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

}  // namespace banet
