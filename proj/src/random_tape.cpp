#include "lcasc/random_tape.hpp"

#include <algorithm>
#include <random>

namespace lcasc {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t absorb(std::uint64_t h, std::uint64_t word, std::uint64_t salt) {
  return mix64(h ^ mix64(word + salt));
}

}  // namespace

Stream::result_type Stream::operator()() {
  const std::uint64_t k = pos_++;
  return mix64(a_ ^ mix64(b_ + k * 0xd1342543de82ef95ULL));
}

std::uint64_t Stream::uniform(std::uint64_t bound) {
  // [threshold, 2^64) has a length divisible by bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x < threshold);
  return x % bound;
}

bool Stream::bernoulli(std::uint64_t num, std::uint64_t den) {
  if (num >= den) return true;
  return uniform(den) < num;
}

Stream RandomTape::stream(const Label& label) const {
  const std::uint64_t packed = (static_cast<std::uint64_t>(label.tag) << 56) |
                               (static_cast<std::uint64_t>(label.i) << 48) |
                               (static_cast<std::uint64_t>(label.j) << 40) |
                               (static_cast<std::uint64_t>(label.i_star) << 32) |
                               (static_cast<std::uint64_t>(label.j_star) << 24) |
                               (static_cast<std::uint64_t>(label.b) << 8);
  const std::uint64_t words[3] = {packed, label.vertex, label.counter};
  std::uint64_t a = mix64(seed_ ^ 0x6a09e667f3bcc908ULL);
  std::uint64_t b = mix64(seed_ ^ 0xbb67ae8584caa73bULL);
  for (std::uint64_t w = 0; w < 3; ++w) {
    a = absorb(a, words[w], 0x3c6ef372fe94f82bULL * (w + 1));
    b = absorb(b, words[w], 0xa54ff53a5f1d36f1ULL * (w + 1));
  }
  return Stream(a, b);
}

std::vector<Drawn> sample_positions(const RandomTape& tape, const Label& label,
                                    std::size_t list_size, std::uint64_t t, std::uint64_t m) {
  std::vector<Drawn> out;
  if (t == 0 || list_size == 0 || m == 0) return out;
  Stream s = tape.stream(label);
  std::uint64_t remaining = t;
  for (std::size_t k = 0; k < list_size && remaining > 0; ++k) {
    // Conditional on the draws not landing on positions < k, each remaining
    // draw lands on k with probability 1 / (m - k).
    const std::uint64_t left = m - k;
    std::uint64_t c;
    if (left == 1) {
      c = remaining;
    } else {
      std::binomial_distribution<std::int64_t> bin(static_cast<std::int64_t>(remaining),
                                                   1.0 / static_cast<double>(left));
      c = static_cast<std::uint64_t>(bin(s));
    }
    if (c > 0) {
      out.push_back({k, c});
      remaining -= c;
    }
  }
  return out;
}

std::vector<Sampled> sample_multiset(const RandomTape& tape, const Label& label,
                                     std::span<const Id> a, std::uint64_t t, std::uint64_t m) {
  std::vector<Sampled> out;
  for (const Drawn& d : sample_positions(tape, label, a.size(), t, m)) {
    out.push_back({a[d.position], d.count});
  }
  return out;
}

std::uint64_t multiset_size(std::span<const Sampled> ms) {
  std::uint64_t n = 0;
  for (const auto& s : ms) n += s.count;
  return n;
}

bool RoundingTape::bit(Id set, int i, int j) const {
  Label label{.tag = Tag::kRounding,
              .i = static_cast<std::uint8_t>(i),
              .j = static_cast<std::uint8_t>(j),
              .vertex = set};
  Stream s = tape_->stream(label);
  return s.bernoulli(pow2_times(j, 1), f_);
}

std::uint64_t pow2_times(int exp, std::uint64_t mult) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  if (mult == 0) return 0;
  if (exp < 0) return mult >> std::min(-exp, 63);
  if (exp >= 62) return cap;
  if (mult > (cap >> exp)) return cap;
  return mult << exp;
}

}  // namespace lcasc
