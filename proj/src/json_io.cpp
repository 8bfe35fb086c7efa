#include "zeck/json_io.hpp"

#include <stdexcept>

namespace zeck {

json state_to_json(const GameState& s) {
  return json{{"n", s.n()},
              {"counts", std::vector<std::uint32_t>(s.counts().begin(), s.counts().end())},
              {"terminal", is_terminal(s)}};
}

json move_to_json(const Move& m) {
  return json{{"kind", m.kind == MoveKind::combine ? "combine" : "split"}, {"index", m.index}};
}

Move move_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("index"))
    throw std::invalid_argument("move needs \"kind\" and \"index\"");
  const auto& kind = j.at("kind");
  const auto& index = j.at("index");
  if (!kind.is_string() || !index.is_number_integer() || index.get<std::int64_t>() < 1)
    throw std::invalid_argument("move kind must be a string and index a positive integer");
  const auto k = kind.get<std::string>();
  const auto i = static_cast<std::uint32_t>(index.get<std::int64_t>());
  if (k == "combine") return Move::combine(i);
  if (k == "split") return Move::split(i);
  throw std::invalid_argument("move kind must be \"combine\" or \"split\"");
}

json moves_to_json(std::span<const Move> moves) {
  json out = json::array();
  for (const Move& m : moves) out.push_back(move_to_json(m));
  return out;
}

json decomposition_to_json(const Decomposition& d) {
  return json{{"x", d.value.str()},
              {"coeffs", d.coeffs},
              {"summands", summand_count(d)},
              {"text", format_decomposition(d)}};
}

json histogram_to_json(const SummandHistogram& hist) {
  json out = json::object();
  for (const auto& [count, freq] : hist) {
    if (freq <= BigInt(1) << 53)
      out[std::to_string(count)] = freq.convert_to<std::uint64_t>();
    else
      out[std::to_string(count)] = freq.str();
  }
  return out;
}

json interval_stats_to_json(const IntervalStats& s) {
  const Moments m = s.moments();
  json gaps = json::object();
  for (const auto& [len, c] : s.gap_histogram) gaps[std::to_string(len)] = c;
  json summands = json::object();
  for (const auto& [k, c] : s.summand_count_histogram) summands[std::to_string(k)] = c;
  return json{{"n", s.n},
              {"interval_size", s.interval_size},
              {"processed", s.processed},
              {"total_gaps", s.total_gaps},
              {"nonzero_gaps", s.nonzero_gaps},
              {"proportion_nonzero", s.proportion_nonzero()},
              {"gap_histogram", gaps},
              {"summand_count_histogram", summands},
              {"moments",
               {{"mean", m.mean}, {"variance", m.variance}, {"skewness", m.skewness}, {"kurtosis", m.excess_kurtosis}}},
              {"index_means", s.index_means()}};
}

}  // namespace zeck
