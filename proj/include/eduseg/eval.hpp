#ifndef EDUSEG_EVAL_HPP
#define EDUSEG_EVAL_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eduseg/segmenter.hpp"

namespace eduseg {

enum class Role { Reference, Candidate };

// (last word of the left segment, first word of the right segment),
// punctuation tokens skipped, lowercase-normalized.
struct BoundaryPair {
  std::string left;
  std::string right;

  bool operator==(const BoundaryPair&) const = default;
};

struct BoundaryPairList {
  std::vector<BoundaryPair> pairs;  // ordered multiset
  std::string doc_id;
  Role role = Role::Candidate;
};

// One pair per adjacent segment boundary. Segments made of punctuation only
// are fused with their predecessor first; documents with fewer than two
// contributing segments yield an empty list.
BoundaryPairList extract_pairs(const SegmentedDocument& doc, std::string doc_id = {},
                               Role role = Role::Candidate);

// Same extraction over bare segment texts (e.g. parsed from a .seg file);
// each text is tokenized with the standard tokenizer.
BoundaryPairList pairs_from_segments(std::span<const std::string> segment_texts,
                                     std::string doc_id = {}, Role role = Role::Candidate);

struct EvalReport {
  std::size_t n_common = 0;     // multiset intersection size
  std::size_t n_candidate = 0;  // |L_c|
  std::size_t n_reference = 0;  // |L_r|
  double precision = 0.0;       // n_common / n_candidate, 0 when empty
  double recall = 0.0;          // n_common / n_reference, 0 when empty
  double f_score = 0.0;         // 2PR/(P+R), 0 when P+R = 0
};

// Multiset intersection scoring: each pair counts min(reference count,
// candidate count) times. Pair comparison is case-insensitive, unifies
// apostrophe code points, and folds each member to the word the extractor
// would produce (last word of the left member, first word of the right),
// so a hand-written "qu'une" matches an extracted "qu'".
EvalReport score(const BoundaryPairList& reference, const BoundaryPairList& candidate);

// Both directions of a human-vs-human comparison:
// (score with a as reference, score with b as reference).
std::pair<EvalReport, EvalReport> agreement(const BoundaryPairList& a,
                                            const BoundaryPairList& b);

struct CorpusReport {
  EvalReport overall;  // micro-average: counts summed across documents
  std::vector<std::pair<std::string, EvalReport>> per_document;
};

// Micro-averaged corpus scoring. Every candidate document id must exist in
// the references (UnknownDocumentError otherwise); reference documents with
// no candidate contribute their pair count to the recall denominator.
CorpusReport corpus_report(const std::map<std::string, BoundaryPairList>& references,
                           const std::map<std::string, BoundaryPairList>& candidates);

// Pair-list file: one pair per line as `left<TAB>right`, '#' comments.
BoundaryPairList read_pairs(std::istream& in, std::string doc_id = {},
                            Role role = Role::Reference);
BoundaryPairList read_pairs_file(const std::string& path, Role role = Role::Reference);

// JSON object {n_common, n_candidate, n_reference, precision, recall,
// f_score} at full precision plus a "rounded" echo at 3 decimals.
std::string report_to_json(const EvalReport& report);

// Aligned-column text table; one row per (label, report).
std::string format_report_table(std::span<const std::pair<std::string, EvalReport>> rows);

}  // namespace eduseg

#endif
