#ifndef LCASC_RANDOM_TAPE_HPP
#define LCASC_RANDOM_TAPE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lcasc/instance.hpp"

namespace lcasc {

/// Namespace byte of a tape label. Every consumer of randomness owns a tag.
enum class Tag : std::uint8_t {
  kGenerator = 1,
  kWarmupSetSample,      // E_{i,j,S}
  kWarmupElementSample,  // sampled containing sets of an element
  kDegreeSample,         // main LCA set subsample
  kWeightSample,         // main LCA containing-set sample
  kRounding,             // t_{S,i,j}
  kTruncate,             // oversize candidate truncation in covered estimates
  kIntegralWarmupSample,
  kEstimator,
  kUser,  // free namespace for harness and tests
};

/// Fixed-width structured label. Two labels select the same stream iff all
/// fields are equal.
struct Label {
  Tag tag = Tag::kUser;
  std::uint8_t i = 0;
  std::uint8_t j = 0;
  std::uint8_t i_star = 0;
  std::uint8_t j_star = 0;
  std::uint16_t b = 0;
  std::uint64_t vertex = 0;
  std::uint64_t counter = 0;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Restartable counter-mode stream; satisfies UniformRandomBitGenerator.
class Stream {
 public:
  using result_type = std::uint64_t;

  Stream(std::uint64_t lane_a, std::uint64_t lane_b) : a_(lane_a), b_(lane_b) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// True with probability min(1, num/den).
  bool bernoulli(std::uint64_t num, std::uint64_t den);

  std::uint64_t position() const { return pos_; }

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t pos_ = 0;
};

/// The common random string: all randomness is a pure function of
/// (master_seed, label).
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t master_seed) : seed_(master_seed) {}

  std::uint64_t seed() const { return seed_; }
  Stream stream(const Label& label) const;

 private:
  std::uint64_t seed_;
};

std::uint64_t mix64(std::uint64_t x);

/// One entry of a sampled multiset: a position into the sampled list and its
/// multiplicity.
struct Drawn {
  std::size_t position;
  std::uint64_t count;
};

/// t independent draws of an index uniform over [0, m); a draw lands on
/// position k iff k < list_size. Returns landed positions in ascending order
/// with multiplicities. Drawn via sequential conditional binomials, so the
/// cost is O(list_size) independent of t.
std::vector<Drawn> sample_positions(const RandomTape& tape, const Label& label,
                                    std::size_t list_size, std::uint64_t t, std::uint64_t m);

struct Sampled {
  Id id;
  std::uint64_t count;
};

/// sample_positions mapped through `a`.
std::vector<Sampled> sample_multiset(const RandomTape& tape, const Label& label,
                                     std::span<const Id> a, std::uint64_t t, std::uint64_t m);

std::uint64_t multiset_size(std::span<const Sampled> ms);

/// Pre-sampled Bernoulli(min(1, 2^j / f)) bit per (set, i, j).
class RoundingTape {
 public:
  RoundingTape(const RandomTape& tape, std::size_t f) : tape_(&tape), f_(f) {}

  bool bit(Id set, int i, int j) const;

 private:
  const RandomTape* tape_;
  std::size_t f_;
};

/// 2^exp * mult, saturating at 2^62.
std::uint64_t pow2_times(int exp, std::uint64_t mult);

}  // namespace lcasc

#endif  // LCASC_RANDOM_TAPE_HPP
