// Independent reference implementations used only by tests. Deliberately
// written from the rule statements, not by calling the library, so that the
// production code and these oracles can disagree.

#ifndef EDUSEG_TESTS_ORACLES_HPP
#define EDUSEG_TESTS_ORACLES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

// Coarse tag for oracle tokens; mirrors the production tagset by name only.
enum class Tag { Verb, Noun, Punct, Other };

struct Word {
  std::string form;  // already normalized
  Tag tag = Tag::Other;
};

// Partition of token indices: each segment is the list of its token
// positions, in order.
using Partition = std::vector<std::vector<std::size_t>>;

// Marker scan: at every position try all entries, take the longest that
// matches word-for-word, never overlap, continue after the match.
std::vector<std::pair<std::size_t, std::size_t>> find_markers(
    const std::vector<Word>& words, const std::vector<std::vector<std::string>>& entries);

// Baseline segmentation of a single sentence: boundary right before every
// marker occurrence except one starting the sentence.
Partition segment_mu(const std::vector<Word>& words,
                     const std::vector<std::vector<std::string>>& entries);

// The two merge strategies applied to the baseline partition of a single
// sentence, rules transcribed literally. strategy: 0 = none, 1 = verbal,
// 2 = verb-nominal.
Partition segment(const std::vector<Word>& words,
                  const std::vector<std::vector<std::string>>& entries, int strategy);

// Brute-force pair matching: every candidate pair greedily claims the first
// still-unclaimed equal reference pair; counts how many claims succeed.
// Comparison is case-insensitive (ASCII).
std::size_t common_pairs(const std::vector<std::pair<std::string, std::string>>& reference,
                         const std::vector<std::pair<std::string, std::string>>& candidate);

}  // namespace oracle

#endif
