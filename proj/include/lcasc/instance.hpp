#ifndef LCASC_INSTANCE_HPP
#define LCASC_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lcasc {

using Id = std::uint32_t;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Bipartite set/element incidence structure with sorted, duplicate-free
/// adjacency lists in both directions. Immutable once built.
class SetCoverInstance {
 public:
  /// Builds from per-set member lists. Members are sorted; duplicates,
  /// out-of-range ids and uncovered elements raise ConsistencyError.
  static SetCoverInstance from_sets(std::size_t num_elements,
                                    std::vector<std::vector<Id>> set_members);

  std::size_t num_sets() const { return set_members_.size(); }
  std::size_t num_elements() const { return element_sets_.size(); }
  std::size_t delta() const { return delta_; }
  std::size_t freq() const { return freq_; }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Id> members(Id set) const { return set_members_[set]; }
  std::span<const Id> sets_of(Id element) const { return element_sets_[element]; }

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;

 private:
  std::vector<std::vector<Id>> set_members_;
  std::vector<std::vector<Id>> element_sets_;
  std::size_t delta_ = 0;
  std::size_t freq_ = 0;
  std::size_t num_edges_ = 0;
};

/// Chosen-set predicate over set ids.
struct IntegralCover {
  std::vector<bool> chosen;

  static IntegralCover none(std::size_t num_sets) { return {std::vector<bool>(num_sets, false)}; }
  static IntegralCover all(std::size_t num_sets) { return {std::vector<bool>(num_sets, true)}; }
  std::size_t size() const;
};

struct FractionalCover {
  std::vector<double> weight;

  double total() const;
  /// Sum of weights of the sets containing `element`.
  double element_weight(const SetCoverInstance& inst, Id element) const;
  /// Minimum element id with element weight below 1, if any.
  std::optional<Id> first_uncovered(const SetCoverInstance& inst) const;
};

struct CoverOk {};
struct Uncovered {
  Id element;
};
using CoverVerdict = std::variant<CoverOk, Uncovered>;

inline bool is_ok(const CoverVerdict& v) { return std::holds_alternative<CoverOk>(v); }

CoverVerdict validate_cover(const SetCoverInstance& inst, const IntegralCover& cover);

// Text format:
//   setcover <num_sets> <num_elements>
//   set <set_id> <elem_id>...
// '#' starts a comment. Sets without a line are empty.
SetCoverInstance parse_instance(std::string_view text);
std::string format_instance(const SetCoverInstance& inst);
SetCoverInstance load_instance(const std::filesystem::path& path);
void save_instance(const SetCoverInstance& inst, const std::filesystem::path& path);

struct UniformRandomFamily {
  std::size_t num_elements;
  std::size_t num_sets;
  std::size_t f_target;
};
struct BlockPlantedFamily {
  std::size_t opt_size;
  std::size_t delta;
  std::size_t f;
};
struct StarFamily {
  std::size_t delta;
};
using GeneratorSpec = std::variant<UniformRandomFamily, BlockPlantedFamily, StarFamily>;

struct GeneratedInstance {
  SetCoverInstance instance;
  /// Known cover for planted families; optimal for block-planted since every
  /// set has at most delta members and the planted blocks are full.
  std::optional<std::vector<Id>> planted_cover;
};

GeneratedInstance generate_instance(const GeneratorSpec& family, std::uint64_t seed);

std::string describe(const GeneratorSpec& family);

}  // namespace lcasc

#endif  // LCASC_INSTANCE_HPP
