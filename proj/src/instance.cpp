#include "lcasc/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lcasc/random_tape.hpp"

namespace lcasc {

SetCoverInstance SetCoverInstance::from_sets(std::size_t num_elements,
                                             std::vector<std::vector<Id>> set_members) {
  if (set_members.empty()) throw ConsistencyError("instance has no sets");
  if (num_elements == 0) throw ConsistencyError("instance has no elements");
  SetCoverInstance inst;
  inst.element_sets_.assign(num_elements, {});
  for (std::size_t s = 0; s < set_members.size(); ++s) {
    auto& members = set_members[s];
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw ConsistencyError("set " + std::to_string(s) + " lists an element twice");
    }
    for (Id e : members) {
      if (e >= num_elements) {
        throw ConsistencyError("set " + std::to_string(s) + " references element " +
                               std::to_string(e) + " out of range");
      }
      inst.element_sets_[e].push_back(static_cast<Id>(s));
    }
    inst.delta_ = std::max(inst.delta_, members.size());
    inst.num_edges_ += members.size();
  }
  for (std::size_t e = 0; e < num_elements; ++e) {
    if (inst.element_sets_[e].empty()) {
      throw ConsistencyError("element " + std::to_string(e) + " is not in any set");
    }
    inst.freq_ = std::max(inst.freq_, inst.element_sets_[e].size());
  }
  inst.set_members_ = std::move(set_members);
  return inst;
}

std::size_t IntegralCover::size() const {
  return static_cast<std::size_t>(std::count(chosen.begin(), chosen.end(), true));
}

double FractionalCover::total() const {
  return std::accumulate(weight.begin(), weight.end(), 0.0);
}

double FractionalCover::element_weight(const SetCoverInstance& inst, Id element) const {
  double w = 0.0;
  for (Id s : inst.sets_of(element)) w += weight[s];
  return w;
}

std::optional<Id> FractionalCover::first_uncovered(const SetCoverInstance& inst) const {
  for (Id e = 0; e < inst.num_elements(); ++e) {
    if (element_weight(inst, e) < 1.0) return e;
  }
  return std::nullopt;
}

CoverVerdict validate_cover(const SetCoverInstance& inst, const IntegralCover& cover) {
  for (Id e = 0; e < inst.num_elements(); ++e) {
    const auto sets = inst.sets_of(e);
    const bool hit = std::any_of(sets.begin(), sets.end(), [&](Id s) { return cover.chosen[s]; });
    if (!hit) return Uncovered{e};
  }
  return CoverOk{};
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

SetCoverInstance parse_instance(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<std::vector<Id>> sets;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0] != "setcover" || toks.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'setcover <num_sets> <num_elements>'");
      }
      header.emplace(parse_number(toks[1], line_no), parse_number(toks[2], line_no));
      sets.assign(header->first, {});
      seen.assign(header->first, false);
      continue;
    }
    if (toks[0] != "set" || toks.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'set <id> <elem>...'");
    }
    const auto id = parse_number(toks[1], line_no);
    if (id >= sets.size()) {
      throw ConsistencyError("line " + std::to_string(line_no) + ": set id " +
                             std::to_string(id) + " out of range");
    }
    if (seen[id]) {
      throw ConsistencyError("line " + std::to_string(line_no) + ": set " + std::to_string(id) +
                             " listed twice");
    }
    seen[id] = true;
    for (std::size_t k = 2; k < toks.size(); ++k) {
      sets[id].push_back(static_cast<Id>(parse_number(toks[k], line_no)));
    }
    if (pos > text.size()) break;
  }
  if (!header) throw ParseError("missing 'setcover' header");
  return SetCoverInstance::from_sets(header->second, std::move(sets));
}

std::string format_instance(const SetCoverInstance& inst) {
  std::string out = "setcover " + std::to_string(inst.num_sets()) + " " +
                    std::to_string(inst.num_elements()) + "\n";
  for (Id s = 0; s < inst.num_sets(); ++s) {
    out += "set ";
    out += std::to_string(s);
    for (Id e : inst.members(s)) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

SetCoverInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const SetCoverInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_instance(inst);
}

namespace {

Label gen_label(std::uint8_t family, std::uint64_t vertex, std::uint64_t counter = 0) {
  return Label{.tag = Tag::kGenerator, .i = family, .vertex = vertex, .counter = counter};
}

template <class T>
void shuffle_with(std::vector<T>& v, Stream& s) {
  for (std::size_t k = v.size(); k > 1; --k) {
    std::swap(v[k - 1], v[s.uniform(k)]);
  }
}

GeneratedInstance make(const UniformRandomFamily& p, const RandomTape& tape) {
  if (p.num_elements == 0 || p.num_sets == 0 || p.f_target == 0) {
    throw InfeasibleParams("uniform-random: n, m and f_target must be positive");
  }
  if (p.f_target > p.num_sets) {
    throw InfeasibleParams("uniform-random: f_target exceeds the number of sets");
  }
  std::vector<std::vector<Id>> sets(p.num_sets);
  std::vector<Id> ids(p.num_sets);
  for (std::size_t e = 0; e < p.num_elements; ++e) {
    std::iota(ids.begin(), ids.end(), Id{0});
    Stream s = tape.stream(gen_label(1, e));
    // Partial Fisher-Yates: first f_target slots are a uniform f-subset.
    for (std::size_t k = 0; k < p.f_target; ++k) {
      std::swap(ids[k], ids[k + s.uniform(p.num_sets - k)]);
      sets[ids[k]].push_back(static_cast<Id>(e));
    }
  }
  return {SetCoverInstance::from_sets(p.num_elements, std::move(sets)), std::nullopt};
}

GeneratedInstance make(const BlockPlantedFamily& p, const RandomTape& tape) {
  if (p.opt_size == 0 || p.delta == 0 || p.f == 0) {
    throw InfeasibleParams("block-planted: opt_size, delta and f must be positive");
  }
  const std::size_t n = p.opt_size * p.delta;
  std::vector<std::vector<Id>> sets;
  for (std::size_t b = 0; b < p.opt_size; ++b) {
    std::vector<Id> block(p.delta);
    std::iota(block.begin(), block.end(), static_cast<Id>(b * p.delta));
    sets.push_back(std::move(block));
  }
  // Decoy layers: each partitions the universe into sets of size delta/2.
  const std::size_t decoy = std::max<std::size_t>(1, p.delta / 2);
  std::vector<Id> perm(n);
  for (std::size_t layer = 1; layer < p.f; ++layer) {
    std::iota(perm.begin(), perm.end(), Id{0});
    Stream s = tape.stream(gen_label(2, layer));
    shuffle_with(perm, s);
    for (std::size_t start = 0; start < n; start += decoy) {
      sets.emplace_back(perm.begin() + start, perm.begin() + std::min(n, start + decoy));
    }
  }
  // Relabel sets so the planted blocks do not sit at the smallest ids.
  std::vector<Id> order(sets.size());
  std::iota(order.begin(), order.end(), Id{0});
  Stream s = tape.stream(gen_label(2, 0, 1));
  shuffle_with(order, s);
  std::vector<std::vector<Id>> relabeled(sets.size());
  std::vector<Id> planted;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    relabeled[order[k]] = std::move(sets[k]);
    if (k < p.opt_size) planted.push_back(order[k]);
  }
  std::sort(planted.begin(), planted.end());
  return {SetCoverInstance::from_sets(n, std::move(relabeled)), std::move(planted)};
}

GeneratedInstance make(const StarFamily& p, const RandomTape&) {
  if (p.delta == 0) throw InfeasibleParams("star: delta must be positive");
  std::vector<std::vector<Id>> sets(p.delta + 1);
  for (std::size_t e = 0; e < p.delta; ++e) {
    sets[0].push_back(static_cast<Id>(e));
    sets[e + 1].push_back(static_cast<Id>(e));
  }
  return {SetCoverInstance::from_sets(p.delta, std::move(sets)), std::vector<Id>{0}};
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorSpec& family, std::uint64_t seed) {
  const RandomTape tape(seed);
  return std::visit([&](const auto& p) { return make(p, tape); }, family);
}

std::string describe(const GeneratorSpec& family) {
  struct {
    std::string operator()(const UniformRandomFamily& p) const {
      return "uniform(n=" + std::to_string(p.num_elements) + ";m=" + std::to_string(p.num_sets) +
             ";f=" + std::to_string(p.f_target) + ")";
    }
    std::string operator()(const BlockPlantedFamily& p) const {
      return "planted(opt=" + std::to_string(p.opt_size) + ";delta=" + std::to_string(p.delta) +
             ";f=" + std::to_string(p.f) + ")";
    }
    std::string operator()(const StarFamily& p) const {
      return "star(delta=" + std::to_string(p.delta) + ")";
    }
  } v;
  return std::visit(v, family);
}

}  // namespace lcasc
