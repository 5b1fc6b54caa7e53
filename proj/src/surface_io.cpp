/*
   Copyright 2026 The delpezzo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "delpezzo/surface_io.hpp"

#include <map>

#include "json.hpp"

namespace delpezzo::io {

using nlohmann::json;

namespace {

std::vector<cubic::SurfaceTerm> parse_block(const json& arr, int tuple_len, int degree,
                                            const std::string& where) {
  if (!arr.is_array()) throw input_error(where + ": coefficient block must be an array");
  std::vector<cubic::SurfaceTerm> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& rec = arr[i];
    const std::string rec_name = where + " record " + std::to_string(i);
    if (!rec.is_object() || !rec.contains("exps") || !rec.contains("value"))
      throw input_error(rec_name + ": expected {exps, value}");
    const auto& exps = rec["exps"];
    if (!exps.is_array() || int(exps.size()) != tuple_len)
      throw input_error(rec_name + ": exponent tuple must have length " + std::to_string(tuple_len));
    cubic::SurfaceTerm t;
    int sum = 0;
    for (int j = 0; j < tuple_len; ++j) {
      const int e = exps[std::size_t(j)].is_number_integer() ? exps[std::size_t(j)].get<int>() : -1;
      if (e < 0 || e > degree)
        throw input_error(rec_name + ": exponent entry out of range");
      t.exps[std::size_t(j)] = std::uint8_t(e);
      sum += e;
    }
    if (sum != degree)
      throw input_error(rec_name + ": exponents must sum to " + std::to_string(degree));
    const auto& value = rec["value"];
    if (!value.is_array() || value.empty())
      throw input_error(rec_name + ": value must be a non-empty array");
    for (const auto& v : value) {
      if (!v.is_number_integer()) throw input_error(rec_name + ": value entries must be integers");
      t.value.push_back(v.get<int>());
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SurfaceFile parse_surface_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("surface file is not valid JSON: ") + e.what());
  }
  SurfaceFile sf;
  if (!j.is_object()) throw input_error("surface file must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw input_error("surface file needs a \"kind\" of \"cubic\" or \"dp4\"");
  sf.kind = j["kind"].get<std::string>();
  if (sf.kind != "cubic" && sf.kind != "dp4")
    throw input_error("unknown kind \"" + sf.kind + "\"");
  if (!j.contains("p") || !j["p"].is_number_integer()) throw input_error("missing prime p");
  sf.p = j["p"].get<int>();
  sf.r = j.value("r", 1);
  if (sf.r < 1) throw input_error("base degree r must be positive");
  if (j.contains("gen_poly")) {
    for (const auto& c : j["gen_poly"]) sf.gen_poly.push_back(c.get<int>());
  } else if (sf.r == 1) {
    sf.gen_poly = {0, 1};
  } else {
    throw input_error("gen_poly is required when r > 1");
  }
  sf.name = j.value("name", "");
  if (!j.contains("coeffs")) throw input_error("missing coeffs");
  const auto& coeffs = j["coeffs"];
  if (sf.kind == "cubic") {
    sf.blocks.push_back(parse_block(coeffs, 4, 3, "coeffs"));
  } else {
    if (!coeffs.is_array() || coeffs.size() != 2)
      throw input_error("dp4 coeffs must be an array of two blocks");
    sf.blocks.push_back(parse_block(coeffs[0], 5, 2, "coeffs[0]"));
    sf.blocks.push_back(parse_block(coeffs[1], 5, 2, "coeffs[1]"));
  }
  return sf;
}

std::string surface_to_json(const SurfaceFile& sf) {
  json j;
  j["kind"] = sf.kind;
  j["p"] = sf.p;
  j["r"] = sf.r;
  if (sf.r > 1) j["gen_poly"] = sf.gen_poly;
  if (!sf.name.empty()) j["name"] = sf.name;
  auto block_json = [&](const std::vector<cubic::SurfaceTerm>& block, int tuple_len) {
    json arr = json::array();
    for (const auto& t : block) {
      json rec;
      rec["exps"] = std::vector<int>(t.exps.begin(), t.exps.begin() + tuple_len);
      rec["value"] = t.value;
      arr.push_back(rec);
    }
    return arr;
  };
  if (sf.kind == "cubic") {
    j["coeffs"] = block_json(sf.blocks.at(0), 4);
  } else {
    j["coeffs"] = json::array({block_json(sf.blocks.at(0), 5), block_json(sf.blocks.at(1), 5)});
  }
  return j.dump(2);
}

cubic::CubicSurface make_cubic(const SurfaceFile& sf, int cap) {
  if (sf.kind != "cubic") throw input_error("surface file is not a cubic");
  return cubic::CubicSurface(sf.p, sf.r, sf.gen_poly, sf.blocks.at(0), cap);
}

std::unique_ptr<cubic::CubicSurface> make_cubic_ptr(const SurfaceFile& sf, int cap) {
  if (sf.kind != "cubic") throw input_error("surface file is not a cubic");
  return std::make_unique<cubic::CubicSurface>(sf.p, sf.r, sf.gen_poly, sf.blocks.at(0), cap);
}

namespace {

const std::map<std::string, std::string>& fixture_map() {
  static const std::map<std::string, std::string> fixtures = {
      {"cubic-f2-one-point", R"({
  "kind": "cubic",
  "name": "cubic-f2-one-point",
  "p": 2,
  "r": 1,
  "coeffs": [
    {"exps": [0,3,0,0], "value": [1]},
    {"exps": [0,2,1,0], "value": [1]},
    {"exps": [0,0,3,0], "value": [1]},
    {"exps": [2,0,0,1], "value": [1]},
    {"exps": [0,2,0,1], "value": [1]},
    {"exps": [0,1,1,1], "value": [1]},
    {"exps": [0,0,2,1], "value": [1]},
    {"exps": [1,0,0,2], "value": [1]},
    {"exps": [0,0,0,3], "value": [1]}
  ]
})"},
      {"cubic-f2-three-points", R"({
  "kind": "cubic",
  "name": "cubic-f2-three-points",
  "p": 2,
  "r": 1,
  "coeffs": [
    {"exps": [2,1,0,0], "value": [1]},
    {"exps": [1,2,0,0], "value": [1]},
    {"exps": [0,0,3,0], "value": [1]},
    {"exps": [0,0,2,1], "value": [1]},
    {"exps": [0,0,0,3], "value": [1]}
  ]
})"},
      {"cubic-f4-theta-a", R"({
  "kind": "cubic",
  "name": "cubic-f4-theta-a",
  "p": 2,
  "r": 2,
  "gen_poly": [1, 1, 1],
  "coeffs": [
    {"exps": [3,0,0,0], "value": [1]},
    {"exps": [0,3,0,0], "value": [1]},
    {"exps": [0,0,3,0], "value": [1]},
    {"exps": [0,0,0,3], "value": [0, 1]}
  ]
})"},
      {"cubic-f4-theta-b", R"({
  "kind": "cubic",
  "name": "cubic-f4-theta-b",
  "p": 2,
  "r": 2,
  "gen_poly": [1, 1, 1],
  "coeffs": [
    {"exps": [3,0,0,0], "value": [1]},
    {"exps": [0,3,0,0], "value": [1]},
    {"exps": [0,0,3,0], "value": [1]},
    {"exps": [0,0,0,3], "value": [1, 1]}
  ]
})"},
  };
  return fixtures;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : fixture_map()) names.push_back(name);
  return names;
}

const std::string& fixture_json(const std::string& name) {
  const auto& m = fixture_map();
  auto it = m.find(name);
  if (it == m.end()) throw input_error("unknown fixture \"" + name + "\"");
  return it->second;
}

}  // namespace delpezzo::io
