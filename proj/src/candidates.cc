#include "sentcomp/candidates.h"

#include <json.hpp>

namespace sentcomp {

SegmentMask full_mask(std::size_t segments) {
  return static_cast<SegmentMask>((std::uint64_t{1} << segments) - 1);
}

std::vector<CompressionCandidate> enumerate_candidates(
    const Sentence& sentence, std::size_t max_segments,
    std::size_t sentence_id) {
  if (max_segments == 0 || max_segments > kMaxSupportedSegments) {
    throw ConfigError("segment cap must be in [1, " +
                      std::to_string(kMaxSupportedSegments) + "]");
  }
  const std::size_t k = sentence.segment_count();
  if (k > max_segments) throw TooManySegments(k, max_segments);

  const SegmentMask all = full_mask(k);
  std::vector<CompressionCandidate> candidates;
  candidates.reserve(all);
  for (SegmentMask i = 0; i < all; ++i) {
    CompressionCandidate candidate;
    candidate.sentence_id = sentence_id;
    candidate.index = i;
    candidate.mask = all - i;
    for (std::size_t j = 0; j < k; ++j) {
      if (!candidate.keeps_segment(j)) continue;
      const auto seg = sentence.segment(j);
      candidate.tokens.insert(candidate.tokens.end(), seg.begin(), seg.end());
    }
    candidates.push_back(std::move(candidate));
  }
  return candidates;
}

std::string mask_to_string(SegmentMask mask, std::size_t segments) {
  std::string bits(segments, '0');
  for (std::size_t j = 0; j < segments; ++j) {
    if ((mask >> j) & 1u) bits[j] = '1';
  }
  return bits;
}

std::string candidate_record(const std::string& document_id,
                             std::size_t sentence_index,
                             const CompressionCandidate& candidate,
                             std::size_t segments) {
  nlohmann::ordered_json record;
  record["doc"] = document_id;
  record["sentence"] = sentence_index;
  record["candidate"] = candidate.index;
  record["mask"] = mask_to_string(candidate.mask, segments);
  record["text"] = candidate.text();
  return record.dump();
}

}  // namespace sentcomp
