#pragma once

// JSON schemas for certificates, witnesses and reduction instances, shared by
// the CLI and the test suites:
//   certificate   {"pairing":[...], "orbits":int, "genus":int}
//   factorization {"pairs":[[u,t],...], "tail":word}
//   witness       {"start":word, "moves":[{"rotation":int, "cuts":[i1,i2,i3]},...]}
//   3-PARTITION   {"n":int, "N":int, "a":[int], "solution":[[i,j,k],...]?}
//   EBP           {"sizes":[int], "N":int, "B":int}

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "clgenus/cbi.hpp"
#include "clgenus/fi.hpp"
#include "clgenus/genus.hpp"
#include "clgenus/reduce.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

using json = nlohmann::json;

inline json certificate_json(const GenusCertificate& c) {
  return json{{"pairing", c.pairing.map()}, {"orbits", c.orbits}, {"genus", c.genus}};
}

inline std::vector<int> pairing_map_from_json(const json& j) {
  return j.at("pairing").get<std::vector<int>>();
}

inline json factorization_json(const CommutatorFactorization& f) {
  json pairs = json::array();
  for (const auto& [u, t] : f.pairs) pairs.push_back(json::array({u.str(), t.str()}));
  return json{{"pairs", pairs}, {"tail", f.tail.str()}};
}

inline CommutatorFactorization factorization_from_json(const json& j,
                                                       const Alphabet& alphabet =
                                                           Alphabet::lowercase()) {
  CommutatorFactorization f;
  for (const auto& pair : j.at("pairs"))
    f.pairs.emplace_back(Word::parse(pair.at(0).get<std::string>(), alphabet),
                         Word::parse(pair.at(1).get<std::string>(), alphabet));
  f.tail = Word::parse(j.value("tail", std::string{}), alphabet);
  return f;
}

inline json sequence_json(const InterchangeSequence& s) {
  json moves = json::array();
  for (const BlockInterchange& m : s.moves)
    moves.push_back(json{{"rotation", m.rotation}, {"cuts", m.cuts}});
  return json{{"start", s.start.str()}, {"moves", moves}};
}

inline InterchangeSequence sequence_from_json(const json& j,
                                              const Alphabet& alphabet = Alphabet::lowercase()) {
  InterchangeSequence s;
  s.start = Word::parse(j.at("start").get<std::string>(), alphabet);
  for (const auto& m : j.at("moves")) {
    BlockInterchange move;
    move.rotation = m.at("rotation").get<int>();
    const auto cuts = m.at("cuts").get<std::vector<int>>();
    if (cuts.size() != 3) throw domain_error("move cuts must have three entries");
    move.cuts = {cuts[0], cuts[1], cuts[2]};
    s.moves.push_back(move);
  }
  return s;
}

inline ThreePartitionInstance three_partition_from_json(const json& j) {
  ThreePartitionInstance inst;
  inst.n = j.at("n").get<int>();
  inst.target = j.at("N").get<long>();
  inst.a = j.at("a").get<std::vector<long>>();
  return inst;
}

inline json three_partition_json(const ThreePartitionInstance& inst) {
  return json{{"n", inst.n}, {"N", inst.target}, {"a", inst.a}};
}

inline std::vector<std::array<int, 3>> three_partition_solution_from_json(const json& j) {
  std::vector<std::array<int, 3>> triples;
  for (const auto& t : j) {
    const auto v = t.get<std::vector<int>>();
    if (v.size() != 3) throw domain_error("3-PARTITION solution entries must be triples");
    triples.push_back({v[0], v[1], v[2]});
  }
  return triples;
}

inline EbpInstance ebp_from_json(const json& j) {
  EbpInstance inst;
  inst.sizes = j.at("sizes").get<std::vector<long>>();
  inst.bins = j.at("N").get<long>();
  inst.capacity = j.at("B").get<long>();
  return inst;
}

inline json cbi_instance_json(const CbiInstance& inst) {
  return json{{"v", inst.v.str()}, {"w", inst.w.str()}, {"k", inst.k}};
}

}  // namespace clgenus
