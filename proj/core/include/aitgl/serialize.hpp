#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "aitgl/bitstring.hpp"
#include "aitgl/game.hpp"
#include "aitgl/string_set.hpp"
#include "aitgl/token_labeler.hpp"
#include "aitgl/toy_machine.hpp"

namespace aitgl {

// StringSet wire format: a JSON array of {"s": "...", "len": n} in arrival
// order; strings are ASCII '0'/'1' text and the empty string keeps an
// explicit length field.
inline nlohmann::json to_json(const StringSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BitString& x : set.members()) {
    arr.push_back({{"s", x.str()}, {"len", x.length()}});
  }
  return arr;
}

inline StringSet string_set_from_json(const nlohmann::json& arr) {
  StringSet set;
  for (const auto& item : arr) {
    auto x = BitString::parse(item.at("s").get<std::string>());
    if (!x) throw std::invalid_argument("string set entries must be over {0,1}");
    if (item.contains("len") && item.at("len").get<std::size_t>() != x->length()) {
      throw std::invalid_argument("length field disagrees with the string");
    }
    set.insert(*x);
  }
  return set;
}

inline const char* event_name(TokenEvent::Kind kind) {
  switch (kind) {
    case TokenEvent::Kind::no_op: return "no_op";
    case TokenEvent::Kind::moved: return "moved";
    case TokenEvent::Kind::placed: return "placed";
  }
  return "?";
}

inline nlohmann::json to_json(std::uint64_t step, const BitString& observed,
                              const TokenEvent& ev) {
  nlohmann::json rec{{"step", step}, {"observed", observed.str()},
                     {"event", event_name(ev.kind)}};
  if (ev.kind != TokenEvent::Kind::no_op) rec["token"] = ev.token;
  if (ev.kind == TokenEvent::Kind::moved) rec["from"] = ev.from.str();
  if (ev.kind != TokenEvent::Kind::no_op) rec["to"] = ev.to.str();
  return rec;
}

inline nlohmann::json to_json(const PlyRecord& rec) {
  nlohmann::json j{{"ply", rec.ply},
                   {"player", rec.player == Player::alice ? "A" : "B"},
                   {"move", rec.move.is_paint ? "paint" : "pass"}};
  if (rec.move.is_paint) {
    j["string"] = rec.move.target.str();
    j["len"] = rec.move.target.length();
  }
  if (rec.quota_used) j["quota_n"] = *rec.quota_used;
  if (rec.coincidence) j["coincidence"] = *rec.coincidence;
  return j;
}

inline nlohmann::json to_json(const GameState::Diagnostic& d) {
  nlohmann::json chain = nlohmann::json::array();
  for (const BitString& x : d.chain) chain.push_back(x.str());
  return {{"chain", chain},
          {"non_red_count", d.non_red_count},
          {"consistent_to", d.consistent_to}};
}

inline nlohmann::json to_json(const Estimate& e) {
  nlohmann::json j{{"n_lo", e.n_lo}, {"n_hi", e.n_hi},
                   {"k_max", e.k_max}, {"budget", e.budget},
                   {"direction", "upper_bound"}};
  j["value"] = e.value ? nlohmann::json(*e.value) : nlohmann::json(nullptr);
  j["witness"] = e.witness ? nlohmann::json(e.witness->raw.str()) : nlohmann::json(nullptr);
  j["n"] = e.witness_n ? nlohmann::json(*e.witness_n) : nlohmann::json(nullptr);
  return j;
}

}  // namespace aitgl
