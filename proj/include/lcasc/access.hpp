#ifndef LCASC_ACCESS_HPP
#define LCASC_ACCESS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <typeindex>
#include <unordered_map>

#include "lcasc/instance.hpp"
#include "lcasc/random_tape.hpp"

namespace lcasc {

struct ParamOverrides {
  std::optional<std::uint64_t> sample_scale;
  std::optional<std::uint64_t> K;
  std::optional<int> delta_boost;
  std::optional<bool> scale_by_four;
};

/// Loop bounds and the tunable constants of the local algorithms.
struct AlgoParams {
  int log_delta = 1;
  int log_f = 1;
  int L = 1;
  std::uint64_t sample_scale = 1;
  std::uint64_t K = 8;
  int delta_boost = 2;
  bool scale_by_four = true;

  static AlgoParams derive(const SetCoverInstance& inst, const ParamOverrides& overrides = {});

  /// Row-major index of iteration (i, j), starting at 1 for (1, 1).
  int t(int i, int j) const { return (i - 1) * log_f + j; }
  int num_iterations() const { return log_delta * log_f; }

  /// Compact "scale=..;K=..;delta=..;x4=.." string for CSV output.
  std::string fingerprint() const;
};

/// ceil(log2 x) clamped to at least 1.
int clamped_log2(std::size_t x);

enum class CacheMode { kPerProbe, kShared };

struct Vertex {
  enum class Kind : std::uint8_t { kSet, kElement };
  Kind kind;
  Id id;

  static Vertex set(Id s) { return {Kind::kSet, s}; }
  static Vertex element(Id e) { return {Kind::kElement, e}; }
};

/// Recorder kinds shared by the local algorithms.
enum OracleKind : int {
  kSetDenseOracle = 0,
  kEleCovOracle = 1,
  kDegreeOracle = 2,
  kWeightOracle = 3,
  kCoveredOracle = 4,
};

/// Largest observed (calls, queries) spent below one cache miss, keyed by
/// (oracle kind, i, j, b).
class CallRecorder {
 public:
  struct Key {
    int kind;
    int i;
    int j;
    int b;
    auto operator<=>(const Key&) const = default;
  };
  struct Cost {
    std::uint64_t calls = 0;
    std::uint64_t queries = 0;
  };

  void record(const Key& key, Cost cost);
  const std::map<Key, Cost>& worst() const { return worst_; }
  void merge(const CallRecorder& other);

 private:
  std::map<Key, Cost> worst_;
};

/// Everything one LCA probe owns: the oracle over the instance, the shared
/// tape, parameters, counters and memo caches.
class ProbeContext {
 public:
  ProbeContext(const SetCoverInstance& inst, const RandomTape& tape, const AlgoParams& params);

  ProbeContext(const ProbeContext&) = delete;
  ProbeContext& operator=(const ProbeContext&) = delete;

  /// idx-th entry of v's sorted adjacency list. Costs one query.
  Id neighbor(Vertex v, std::size_t idx);
  /// Length of v's adjacency list. Costs one query.
  std::size_t list_size(Vertex v);
  std::uint64_t query_count() const { return queries_; }

  const RandomTape& tape() const { return *tape_; }
  const AlgoParams& params() const { return params_; }
  /// Δ and f are global parameters known to every probe, not adjacency reads.
  std::size_t delta() const { return inst_->delta(); }
  std::size_t freq() const { return inst_->freq(); }
  std::size_t num_sets() const { return inst_->num_sets(); }
  std::size_t num_elements() const { return inst_->num_elements(); }

  /// Memo cache of type T, default-constructed on first use.
  template <class T>
  T& cache() {
    auto& slot = caches_[std::type_index(typeid(T))];
    if (!slot) slot = std::make_shared<T>();
    return *static_cast<T*>(slot.get());
  }
  void clear_caches() { caches_.clear(); }

  void count_call() { ++calls_; }
  std::uint64_t call_count() const { return calls_; }
  CallRecorder& recorder() { return recorder_; }

 private:
  const SetCoverInstance* inst_;
  const RandomTape* tape_;
  AlgoParams params_;
  std::uint64_t queries_ = 0;
  std::uint64_t calls_ = 0;
  std::unordered_map<std::type_index, std::shared_ptr<void>> caches_;
  CallRecorder recorder_;
};

/// Samples v's adjacency list through the oracle: list_size once, then one
/// neighbor read per distinct landed position.
std::vector<Sampled> sample_neighbors(ProbeContext& ctx, Vertex v, const Label& label,
                                      std::uint64_t t, std::uint64_t m);

/// Packs an oracle argument tuple into one cache key.
inline std::uint64_t pack_key(int i, int j, int i_star, int j_star, int b, Id id) {
  return (static_cast<std::uint64_t>(i) << 58) | (static_cast<std::uint64_t>(j) << 52) |
         (static_cast<std::uint64_t>(i_star) << 46) | (static_cast<std::uint64_t>(j_star) << 40) |
         (static_cast<std::uint64_t>(b) << 32) | id;
}

/// Measures the calls and queries spent inside one scope and records them
/// under `key` when the scope finishes.
class CostScope {
 public:
  CostScope(ProbeContext& ctx, CallRecorder::Key key)
      : ctx_(ctx), key_(key), calls_(ctx.call_count()), queries_(ctx.query_count()) {}
  ~CostScope() {
    ctx_.recorder().record(key_, {ctx_.call_count() - calls_, ctx_.query_count() - queries_});
  }
  CostScope(const CostScope&) = delete;
  CostScope& operator=(const CostScope&) = delete;

 private:
  ProbeContext& ctx_;
  CallRecorder::Key key_;
  std::uint64_t calls_;
  std::uint64_t queries_;
};

}  // namespace lcasc

#endif  // LCASC_ACCESS_HPP
