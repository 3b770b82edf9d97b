#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "lcasc/access.hpp"
#include "lcasc/main_lca.hpp"
#include "lcasc/warmup_lca.hpp"

using namespace lcasc;

TEST_CASE("neighbor reads the sorted adjacency list and costs one query") {
  const SetCoverInstance inst = fixture::make(10, {{9, 3, 5}, {0, 1, 2, 4, 6, 7, 8}});
  const RandomTape tape(1);
  ProbeContext ctx(inst, tape, AlgoParams::derive(inst));
  CHECK(ctx.query_count() == 0);
  CHECK(ctx.neighbor(Vertex::set(0), 0) == 3);
  CHECK(ctx.query_count() == 1);
  CHECK(ctx.neighbor(Vertex::set(0), 1) == 5);
  CHECK(ctx.neighbor(Vertex::set(0), 2) == 9);
  CHECK(ctx.query_count() == 3);
  CHECK(ctx.neighbor(Vertex::element(5), 0) == 0);
  CHECK_THROWS_AS(ctx.neighbor(Vertex::set(0), 3), std::out_of_range);
  CHECK(ctx.query_count() == 4);
}

TEST_CASE("reading every position enumerates the adjacency lists") {
  const SetCoverInstance inst = fixture::small_uniform(4);
  const RandomTape tape(1);
  ProbeContext ctx(inst, tape, AlgoParams::derive(inst));
  std::uint64_t expected = 0;
  for (Id s = 0; s < inst.num_sets(); ++s) {
    const std::size_t size = ctx.list_size(Vertex::set(s));
    REQUIRE(size == inst.members(s).size());
    for (std::size_t k = 0; k < size; ++k) CHECK(ctx.neighbor(Vertex::set(s), k) == inst.members(s)[k]);
    expected += 1 + size;
  }
  for (Id e = 0; e < inst.num_elements(); ++e) {
    const std::size_t size = ctx.list_size(Vertex::element(e));
    for (std::size_t k = 0; k < size; ++k) CHECK(ctx.neighbor(Vertex::element(e), k) == inst.sets_of(e)[k]);
    expected += 1 + size;
  }
  CHECK(ctx.query_count() == expected);
}

TEST_CASE("list sizes and the handshake identity") {
  const SetCoverInstance inst = fixture::make(3, {{0}, {0, 1, 2}, {0, 2}});
  const RandomTape tape(1);
  ProbeContext ctx(inst, tape, AlgoParams::derive(inst));
  CHECK(ctx.list_size(Vertex::set(0)) == 1);
  CHECK(ctx.list_size(Vertex::element(0)) == inst.freq());
  CHECK(ctx.query_count() == 2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SetCoverInstance g = fixture::small_uniform(seed);
    ProbeContext c(g, tape, AlgoParams::derive(g));
    std::size_t by_sets = 0;
    std::size_t by_elements = 0;
    for (Id s = 0; s < g.num_sets(); ++s) by_sets += c.list_size(Vertex::set(s));
    for (Id e = 0; e < g.num_elements(); ++e) by_elements += c.list_size(Vertex::element(e));
    CHECK(by_sets == by_elements);
    CHECK(by_sets == g.num_edges());
  }
}

TEST_CASE("parameter derivation") {
  const SetCoverInstance star = generate_instance(StarFamily{8}, 1).instance;
  const AlgoParams p = AlgoParams::derive(star);
  CHECK(p.log_delta == 3);
  CHECK(p.log_f == 1);
  CHECK(p.L == 3);
  CHECK(p.sample_scale == 27);
  CHECK(p.K == 8);
  CHECK(p.delta_boost == 2);
  CHECK(p.scale_by_four);
  CHECK(p.t(1, 1) == 1);
  CHECK(p.t(3, 1) == 3);
  CHECK(p.fingerprint() == "scale=27;K=8;delta=2;x4=1");

  const SetCoverInstance single = fixture::make(1, {{0}});
  const AlgoParams q = AlgoParams::derive(single);
  CHECK(q.log_delta == 1);
  CHECK(q.log_f == 1);
  CHECK(q.sample_scale == 1);

  const SetCoverInstance p84 = generate_instance(BlockPlantedFamily{2, 8, 4}, 1).instance;
  const AlgoParams r = AlgoParams::derive(p84, {.sample_scale = 8, .K = 2, .scale_by_four = false});
  CHECK(r.log_f == 2);
  CHECK(r.t(2, 1) == 3);
  CHECK(r.num_iterations() == 6);
  CHECK(r.sample_scale == 8);
  CHECK(r.K == 2);
  CHECK_FALSE(r.scale_by_four);
  CHECK_THROWS_AS(AlgoParams::derive(p84, {.K = 0}), InfeasibleParams);
  CHECK_THROWS_AS(AlgoParams::derive(p84, {.delta_boost = 0}), InfeasibleParams);
  CHECK(clamped_log2(1) == 1);
  CHECK(clamped_log2(5) == 3);
  CHECK(clamped_log2(32) == 5);
}

TEST_CASE("memoized oracle calls cost no further queries") {
  const SetCoverInstance inst = generate_instance(BlockPlantedFamily{2, 8, 4}, 3).instance;
  const RandomTape tape(4);
  ProbeContext ctx(inst, tape, AlgoParams::derive(inst));
  WarmupLca lca(ctx);
  const Density first = lca.is_set_dense(2, 1, 0);
  const auto after = ctx.query_count();
  CHECK(lca.is_set_dense(2, 1, 0) == first);
  CHECK(ctx.query_count() == after);
  ctx.clear_caches();
  CHECK(lca.is_set_dense(2, 1, 0) == first);
  CHECK(ctx.query_count() > after);
}

TEST_CASE("identical probes spend identical query counts") {
  const SetCoverInstance inst = generate_instance(BlockPlantedFamily{3, 8, 4}, 2).instance;
  const RandomTape tape(8);
  const AlgoParams params = AlgoParams::derive(inst);
  for (Id s = 0; s < 4; ++s) {
    std::vector<std::uint64_t> counts(3);
    std::vector<std::thread> pool;
    for (auto& c : counts) {
      pool.emplace_back([&, s] {
        ProbeContext ctx(inst, tape, params);
        main_probe_weight(ctx, s);
        c = ctx.query_count();
      });
    }
    for (auto& th : pool) th.join();
    CHECK(counts[0] == counts[1]);
    CHECK(counts[1] == counts[2]);
  }
}

TEST_CASE("call recorder keeps the worst cost per key") {
  CallRecorder a;
  a.record({kDegreeOracle, 1, 1, 1}, {5, 10});
  a.record({kDegreeOracle, 1, 1, 1}, {3, 20});
  CallRecorder b;
  b.record({kDegreeOracle, 1, 1, 1}, {7, 1});
  b.record({kWeightOracle, 1, 2, 1}, {1, 1});
  a.merge(b);
  REQUIRE(a.worst().size() == 2);
  const auto& w = a.worst().at({kDegreeOracle, 1, 1, 1});
  CHECK(w.calls == 7);
  CHECK(w.queries == 20);
}

TEST_CASE("boost frame distance") {
  CHECK(BoostFrame::at(2, 1, 2, 3).b == 3);
  CHECK(BoostFrame::at(2, 3, 2, 3).b == 1);
  CHECK(BoostFrame::at(1, 2, 3, 2).b == 2);
  CHECK(BoostFrame::at(1, 1, 1, 1).b == 1);
  const BoostFrame fr = BoostFrame::at(1, 1, 3, 2).with(2, 1, 5);
  CHECK(fr.i_star == 3);
  CHECK(fr.j_star == 2);
  CHECK(fr.b == 5);
}
