#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrel/common.hpp"

namespace vrel {

enum class Split { train, val, test };

const char* to_string(Split split);
Split split_from_string(const std::string& name);

struct VideoRecord {
  std::string id;
  Matrix frame_features;  // [n_frames x d_frame]
  Vector video_feature;   // [d_video]

  Index n_frames() const { return frame_features.rows(); }
};

struct RelevanceList {
  std::string anchor_id;
  std::vector<std::string> relevant_ids;  // ranked, most relevant first
};

// Immutable after construction; safe for concurrent reads.
struct Corpus {
  std::vector<VideoRecord> videos;  // insertion order is the canonical order
  std::unordered_map<std::string, std::size_t> index;
  std::unordered_map<std::string, RelevanceList> relevance;
  std::unordered_map<std::string, Split> split;

  Index d_frame() const { return videos.empty() ? 0 : videos.front().frame_features.cols(); }
  Index d_video() const { return videos.empty() ? 0 : videos.front().video_feature.size(); }
  std::size_t size() const { return videos.size(); }

  bool has(const std::string& id) const { return index.count(id) > 0; }
  const VideoRecord& video(const std::string& id) const;
  Split split_of(const std::string& id) const;
  const std::vector<std::string>& relevant_of(const std::string& id) const;  // empty if none

  std::vector<std::string> all_ids() const;
  std::vector<std::string> ids_in(Split s) const;

  void add(VideoRecord record, Split s);
  void validate() const;
};

struct SynthConfig {
  Index n_videos = 200;
  Index n_clusters = 10;
  Index d_frame = 16;
  Index d_video = 8;
  Index frames_min = 5;
  Index frames_max = 12;
  double noise_sigma = 0.1;
  Index relevance_size = 5;
  std::uint64_t seed = 1;
  // Remainder after train and val goes to test.
  double train_fraction = 0.85;
  double val_fraction = 0.15;

  void validate() const;
};

// Planted-cluster corpus: every video is its cluster's centroid pair (frame
// and video space) plus i.i.d. Gaussian noise, quantized to f32 so that
// save/load round-trips bit-exactly. Pure function of the seed.
Corpus generate_synthetic(const SynthConfig& config);

// manifest.json + one .f32 blob per video (frame rows then the video vector,
// little-endian f32, row-major).
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus load_corpus(const std::filesystem::path& manifest_path);

}  // namespace vrel
