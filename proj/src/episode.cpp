// Copyright 2026 The gymv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "gymv/episode.hpp"

#include <fstream>
#include <sstream>

namespace gymv {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << bytes;
}

std::string store_png(const std::string& b64, const fs::path& dir, const std::string& name) {
  const auto bytes = base64_decode(b64);
  fs::create_directories(dir / "images");
  const fs::path rel = fs::path("images") / name;
  write_file(dir / rel, std::string(bytes.begin(), bytes.end()));
  return rel.generic_string();
}

std::string load_png(const std::string& rel, const fs::path& dir) {
  const std::string bytes = read_file(dir / rel);
  return base64_encode(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

// Swaps inline base64 images for files, depth first.
void externalize(Json& node, const fs::path& dir, const std::string& prefix, std::size_t& counter) {
  if (node.is_object()) {
    if (node.contains("image") && node["image"].is_string() && node.contains("segments")) {
      node["image_path"] = store_png(node["image"].get<std::string>(), dir,
                                     prefix + "_" + std::to_string(counter++) + ".png");
      node.erase("image");
      if (node.contains("history_images")) {
        Json paths = Json::array();
        for (const auto& im : node["history_images"]) {
          paths.push_back(store_png(im.get<std::string>(), dir, prefix + "_" + std::to_string(counter++) + ".png"));
        }
        node["history_image_paths"] = paths;
        node.erase("history_images");
      }
    }
    for (auto& [k, v] : node.items()) externalize(v, dir, prefix, counter);
  } else if (node.is_array()) {
    for (auto& v : node) externalize(v, dir, prefix, counter);
  }
}

void internalize(Json& node, const fs::path& dir) {
  if (node.is_object()) {
    if (node.contains("image_path")) {
      node["image"] = load_png(node["image_path"].get<std::string>(), dir);
      node.erase("image_path");
    }
    if (node.contains("history_image_paths")) {
      Json images = Json::array();
      for (const auto& p : node["history_image_paths"]) images.push_back(load_png(p.get<std::string>(), dir));
      node["history_images"] = images;
      node.erase("history_image_paths");
    }
    for (auto& [k, v] : node.items()) internalize(v, dir);
  } else if (node.is_array()) {
    for (auto& v : node) internalize(v, dir);
  }
}

}  // namespace

Json episode_to_json(const EpisodeRecord& r, ImageStorage storage, const fs::path& dir, std::size_t index) {
  Json transitions = Json::array();
  for (const auto& t : r.transitions) {
    Json actions = Json::object();
    for (const auto& [agent, a] : t.actions) actions[agent] = a;
    transitions.push_back(Json{{"observations", observations_to_json(t.observations)},
                               {"actions", actions},
                               {"result", step_result_to_json(t.result)}});
  }
  Json j{{"spec", r.spec},
         {"seed", r.seed.value},
         {"agent", r.agent},
         {"rollout", r.rollout},
         {"transitions", transitions},
         {"returns", r.returns},
         {"final_score", r.final_score}};
  if (r.error) j["error"] = *r.error;
  if (storage == ImageStorage::kFiles) {
    std::size_t counter = 0;
    externalize(j["transitions"], dir, "ep" + std::to_string(index), counter);
  }
  return j;
}

EpisodeRecord episode_from_json(const Json& input, const fs::path& dir) {
  Json j = input;
  internalize(j["transitions"], dir);
  EpisodeRecord r;
  r.spec = j.at("spec").get<EnvSpec>();
  r.seed = Seed{j.at("seed").get<std::uint64_t>()};
  r.agent = j.at("agent").get<std::string>();
  r.rollout = j.value("rollout", 0);
  for (const auto& t : j.at("transitions")) {
    Transition tr;
    tr.observations = observations_from_json(t.at("observations"));
    for (const auto& [agent, a] : t.at("actions").items()) tr.actions[agent] = a.get<std::string>();
    tr.result = step_result_from_json(t.at("result"));
    r.transitions.push_back(std::move(tr));
  }
  r.returns = j.at("returns").get<std::map<std::string, double>>();
  r.final_score = j.at("final_score").get<double>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  return r;
}

std::string batch_to_jsonl(const EpisodeBatch& batch, ImageStorage storage, const fs::path& dir) {
  std::string out;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out += episode_to_json(batch[i], storage, dir, i).dump();
    out += '\n';
  }
  return out;
}

EpisodeBatch batch_from_jsonl(const std::string& text, const fs::path& dir) {
  EpisodeBatch batch;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    batch.push_back(episode_from_json(Json::parse(line), dir));
  }
  return batch;
}

void write_batch(const EpisodeBatch& batch, const fs::path& file, ImageStorage storage) {
  const fs::path dir = file.has_parent_path() ? file.parent_path() : fs::path(".");
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  write_file(file, batch_to_jsonl(batch, storage, dir));
}

EpisodeBatch read_batch(const fs::path& file) {
  const fs::path dir = file.has_parent_path() ? file.parent_path() : fs::path(".");
  return batch_from_jsonl(read_file(file), dir);
}

}  // namespace gymv
