#ifndef SENTCOMP_CANDIDATES_H_
#define SENTCOMP_CANDIDATES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sentcomp/errors.h"
#include "sentcomp/text.h"

namespace sentcomp {

// Bit j set <=> segment j+1 is kept (segment 1 is the lowest bit).
using SegmentMask = std::uint32_t;

inline constexpr std::size_t kDefaultMaxSegments = 12;
// Upper bound accepted for the configurable cap.
inline constexpr std::size_t kMaxSupportedSegments = 24;

struct CompressionCandidate {
  std::size_t sentence_id = 0;
  SegmentMask mask = 0;
  // Ordinal i; mask == 2^k - 1 - i.
  std::size_t index = 0;
  std::vector<Token> tokens;

  // j is 0-based: keeps_segment(0) tests segment 1.
  bool keeps_segment(std::size_t j) const { return (mask >> j) & 1u; }
  std::string text() const { return detokenize(tokens); }
};

// Raised when a sentence has more segments than the configured cap; callers
// pass such sentences through uncompressed.
class TooManySegments : public DataError {
 public:
  TooManySegments(std::size_t segments, std::size_t cap)
      : DataError("sentence has " + std::to_string(segments) +
                  " segments, more than the cap of " + std::to_string(cap)),
        segments_(segments),
        cap_(cap) {}

  std::size_t segments() const { return segments_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t segments_;
  std::size_t cap_;
};

// All 2^k - 1 non-empty, order-preserving segment subsequences, produced by a
// binary counter running down from the all-ones mask: candidate 0 is the full
// sentence. Throws TooManySegments when k > max_segments and ConfigError when
// max_segments exceeds kMaxSupportedSegments.
std::vector<CompressionCandidate> enumerate_candidates(
    const Sentence& sentence, std::size_t max_segments = kDefaultMaxSegments,
    std::size_t sentence_id = 0);

SegmentMask full_mask(std::size_t segments);

// One character per segment in segment order: "101" keeps segments 1 and 3.
std::string mask_to_string(SegmentMask mask, std::size_t segments);

// Line-delimited JSON record of one candidate for the dump file.
std::string candidate_record(const std::string& document_id,
                             std::size_t sentence_index,
                             const CompressionCandidate& candidate,
                             std::size_t segments);

}  // namespace sentcomp

#endif  // SENTCOMP_CANDIDATES_H_
