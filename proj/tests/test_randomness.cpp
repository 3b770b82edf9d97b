#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "lcasc/random_tape.hpp"

using namespace lcasc;

TEST_CASE("same label gives the same first 100 draws") {
  const RandomTape tape(42);
  const Label label{.tag = Tag::kUser, .i = 3, .j = 1, .vertex = 17};
  Stream a = tape.stream(label);
  Stream b = tape.stream(label);
  for (int k = 0; k < 100; ++k) CHECK(a.uniform(1000) == b.uniform(1000));
}

TEST_CASE("labels differing in one field give different streams") {
  const RandomTape tape(42);
  const Label base{.tag = Tag::kUser, .i = 3, .j = 1, .vertex = 17};
  std::vector<Label> variants(7, base);
  variants[0].counter = 1;
  variants[1].i_star = 1;
  variants[2].j_star = 1;
  variants[3].b = 1;
  variants[4].tag = Tag::kEstimator;
  variants[5].vertex = 18;
  variants[6].j = 2;
  Stream s0 = tape.stream(base);
  const auto first = s0();
  for (const Label& v : variants) CHECK(tape.stream(v)() != first);
  CHECK(RandomTape(43).stream(base)() != first);
}

TEST_CASE("chi-square critical value for 15 degrees of freedom at 1e-3") {
  // Frozen value checked against the incomplete gamma oracle.
  constexpr double kCritical = 37.697;
  CHECK(oracle::chi_square_survival(kCritical, 15) == doctest::Approx(1e-3).epsilon(0.01));
}

TEST_CASE("uniform draws over 16 values pass chi-square at 1e-3") {
  const RandomTape tape(2024);
  Stream s = tape.stream({.tag = Tag::kUser, .vertex = 5});
  std::vector<std::uint64_t> counts(16, 0);
  constexpr int kDraws = 100000;
  for (int k = 0; k < kDraws; ++k) ++counts[s.uniform(16)];
  const double stat = oracle::chi_square_statistic(counts, kDraws / 16.0);
  CHECK(stat < 37.697);
}

TEST_CASE("sample_multiset edge sizes") {
  const RandomTape tape(9);
  const std::vector<Id> a = {4, 8, 15, 16, 23, 42};
  const Label label{.tag = Tag::kUser, .vertex = 1};
  CHECK(sample_multiset(tape, label, a, 0, 6).empty());
  CHECK(multiset_size(sample_multiset(tape, label, a, 1000, 6)) == 1000);
  const auto again = sample_multiset(tape, label, a, 1000, 6);
  const auto first = sample_multiset(tape, label, a, 1000, 6);
  REQUIRE(again.size() == first.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(again[k].id == first[k].id);
    CHECK(again[k].count == first[k].count);
  }
}

TEST_CASE("half-full list keeps the sample size near half") {
  std::vector<Id> a(50);
  std::iota(a.begin(), a.end(), Id{0});
  const RandomTape tape(1);
  const std::uint64_t t = 10000;
  const auto size = multiset_size(sample_multiset(tape, {.tag = Tag::kUser}, a, t, 100));
  CHECK(size >= t * 45 / 100);
  CHECK(size <= t * 55 / 100);
}

TEST_CASE("sampled position counts match the literal procedure in distribution") {
  // Each position's count is Binomial(t, 1/m) in both samplers.
  constexpr std::size_t kList = 5;
  constexpr std::uint64_t kT = 40;
  constexpr std::uint64_t kM = 8;
  constexpr int kRuns = 20000;
  std::vector<double> lib_mean(kList, 0), lit_mean(kList, 0), lib_sq(kList, 0);
  std::mt19937_64 rng(77);
  const RandomTape tape(77);
  for (int r = 0; r < kRuns; ++r) {
    for (const Drawn& d :
         sample_positions(tape, {.tag = Tag::kUser, .counter = std::uint64_t(r)}, kList, kT, kM)) {
      lib_mean[d.position] += d.count;
      lib_sq[d.position] += double(d.count) * d.count;
    }
    const auto lit = oracle::literal_sample_counts(rng, kList, kT, kM);
    for (std::size_t k = 0; k < kList; ++k) lit_mean[k] += lit[k];
  }
  const double p = 1.0 / kM;
  for (std::size_t k = 0; k < kList; ++k) {
    const double mean = lib_mean[k] / kRuns;
    const double var = lib_sq[k] / kRuns - mean * mean;
    CHECK(mean == doctest::Approx(kT * p).epsilon(0.02));
    CHECK(lit_mean[k] / kRuns == doctest::Approx(kT * p).epsilon(0.02));
    CHECK(var == doctest::Approx(kT * p * (1 - p)).epsilon(0.05));
  }
}

TEST_CASE("sample positions ascend and never exceed t") {
  const RandomTape tape(3);
  for (std::uint64_t c = 0; c < 200; ++c) {
    const auto ds = sample_positions(tape, {.tag = Tag::kUser, .counter = c}, 7, 30, 11);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      CHECK(ds[k].position < 7);
      CHECK(ds[k].count > 0);
      if (k > 0) CHECK(ds[k - 1].position < ds[k].position);
      total += ds[k].count;
    }
    CHECK(total <= 30);
  }
}

TEST_CASE("rounding bit at j = log2 f is always 1") {
  const RandomTape tape(5);
  const RoundingTape bits(tape, 8);
  for (Id s = 0; s < 1000; ++s) CHECK(bits.bit(s, 2, 3));
  const RoundingTape bits5(tape, 5);
  for (Id s = 0; s < 1000; ++s) CHECK(bits5.bit(s, 1, 3));
}

TEST_CASE("rounding bits repeat per key") {
  const RandomTape tape(5);
  const RoundingTape bits(tape, 8);
  for (Id s = 0; s < 200; ++s) CHECK(bits.bit(s, 1, 1) == bits.bit(s, 1, 1));
}

TEST_CASE("rounding bit frequency at j = 1, f = 8") {
  const RandomTape tape(11);
  const RoundingTape bits(tape, 8);
  int ones = 0;
  constexpr int kSets = 100000;
  for (Id s = 0; s < kSets; ++s) ones += bits.bit(s, 1, 1) ? 1 : 0;
  CHECK(double(ones) / kSets == doctest::Approx(2.0 / 8.0).epsilon(0.02));
}

TEST_CASE("pow2_times saturates") {
  CHECK(pow2_times(3, 5) == 40);
  CHECK(pow2_times(0, 7) == 7);
  CHECK(pow2_times(-1, 7) == 3);
  CHECK(pow2_times(70, 1) == (std::uint64_t{1} << 62));
  CHECK(pow2_times(40, 1u << 30) == (std::uint64_t{1} << 62));
  CHECK(pow2_times(10, 0) == 0);
}
