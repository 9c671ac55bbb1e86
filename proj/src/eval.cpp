#include "eduseg/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "eduseg/errors.hpp"
#include "eduseg/utf8.hpp"

namespace eduseg {

namespace {

// Pair extraction over segments given as token sequences. Pure-punctuation
// (or empty) segments carry no boundary word of their own: they are fused
// with the preceding segment, or with the following one when nothing
// precedes yet.
BoundaryPairList extract_from_token_groups(const std::vector<std::vector<Token>>& groups,
                                           std::string doc_id, Role role) {
  auto has_word = [](const std::vector<Token>& tokens) {
    return std::any_of(tokens.begin(), tokens.end(),
                       [](const Token& t) { return !t.is_punct(); });
  };

  // Effective segments after fusion, each kept as the list of its non-PUNCT
  // norms (punctuation never becomes a boundary word).
  std::vector<std::vector<std::string>> effective;
  for (const auto& tokens : groups) {
    if (!has_word(tokens)) continue;  // fused: contributes no words
    std::vector<std::string> words;
    for (const Token& t : tokens)
      if (!t.is_punct()) words.push_back(t.norm);
    effective.push_back(std::move(words));
  }

  BoundaryPairList out;
  out.doc_id = std::move(doc_id);
  out.role = role;
  for (std::size_t i = 0; i + 1 < effective.size(); ++i)
    out.pairs.push_back({effective[i].back(), effective[i + 1].front()});
  return out;
}

bool punct_only(std::string_view word) {
  bool any = false;
  for (std::size_t i = 0; i < word.size();) {
    auto d = utf8::decode(word, i);
    if (!utf8::is_punct(d.cp)) return false;
    any = true;
    i += d.size;
  }
  return any;
}

// A pair member folds to the word the extractor would have produced: the
// last word for the left member, the first for the right. Hand-authored
// files may carry "qu'une" where extraction yields "qu'"; both sides meet
// at the same key. Case and apostrophe variants fold via normalize_word.
std::string member_key(const std::string& member, bool take_first) {
  std::vector<std::string> words = tokenize_words(member);
  std::erase_if(words, [](const std::string& w) { return punct_only(w); });
  if (words.empty()) return normalize_word(member);
  return take_first ? words.front() : words.back();
}

std::string pair_key(const BoundaryPair& pair) {
  return member_key(pair.left, false) + '\t' + member_key(pair.right, true);
}

EvalReport report_from_counts(std::size_t n_common, std::size_t n_candidate,
                              std::size_t n_reference) {
  EvalReport r;
  r.n_common = n_common;
  r.n_candidate = n_candidate;
  r.n_reference = n_reference;
  r.precision = n_candidate ? double(n_common) / double(n_candidate) : 0.0;
  r.recall = n_reference ? double(n_common) / double(n_reference) : 0.0;
  r.f_score = (r.precision + r.recall) > 0.0
                  ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                  : 0.0;
  return r;
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

BoundaryPairList extract_pairs(const SegmentedDocument& doc, std::string doc_id, Role role) {
  std::vector<std::vector<Token>> groups;
  groups.reserve(doc.segments.size());
  for (const Segment& seg : doc.segments) {
    const auto& tokens = doc.sentences[seg.sentence].tokens;
    groups.emplace_back(tokens.begin() + seg.begin, tokens.begin() + seg.end);
  }
  return extract_from_token_groups(groups, std::move(doc_id), role);
}

BoundaryPairList pairs_from_segments(std::span<const std::string> segment_texts,
                                     std::string doc_id, Role role) {
  std::vector<std::vector<Token>> groups;
  groups.reserve(segment_texts.size());
  for (const std::string& text : segment_texts) groups.push_back(tokenize(text));
  return extract_from_token_groups(groups, std::move(doc_id), role);
}

EvalReport score(const BoundaryPairList& reference, const BoundaryPairList& candidate) {
  std::map<std::string, std::size_t> ref_counts;
  for (const BoundaryPair& p : reference.pairs) ++ref_counts[pair_key(p)];

  // Multiset intersection: a pair matches min(count in reference, count in
  // candidate) times, so repeated pairs cannot be claimed more often than
  // the reference contains them.
  std::size_t n_common = 0;
  for (const BoundaryPair& p : candidate.pairs) {
    auto it = ref_counts.find(pair_key(p));
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++n_common;
    }
  }
  return report_from_counts(n_common, candidate.pairs.size(), reference.pairs.size());
}

std::pair<EvalReport, EvalReport> agreement(const BoundaryPairList& a,
                                            const BoundaryPairList& b) {
  return {score(a, b), score(b, a)};
}

CorpusReport corpus_report(const std::map<std::string, BoundaryPairList>& references,
                           const std::map<std::string, BoundaryPairList>& candidates) {
  for (const auto& [id, cand] : candidates)
    if (!references.count(id))
      throw UnknownDocumentError("candidate document '" + id + "' has no reference");

  CorpusReport report;
  std::size_t common = 0, cand_total = 0, ref_total = 0;
  for (const auto& [id, ref] : references) {
    EvalReport doc_report;
    auto it = candidates.find(id);
    if (it != candidates.end()) {
      doc_report = score(ref, it->second);
    } else {
      // Missing prediction: nothing retrieved, every reference pair missed.
      doc_report = report_from_counts(0, 0, ref.pairs.size());
    }
    common += doc_report.n_common;
    cand_total += doc_report.n_candidate;
    ref_total += doc_report.n_reference;
    report.per_document.emplace_back(id, doc_report);
  }
  report.overall = report_from_counts(common, cand_total, ref_total);
  return report;
}

BoundaryPairList read_pairs(std::istream& in, std::string doc_id, Role role) {
  BoundaryPairList out;
  out.doc_id = std::move(doc_id);
  out.role = role;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      first = false;
    }
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error("pair file line " + std::to_string(line_no) +
                  ": expected `left<TAB>right`, got '" + line + "'");
    std::string left = trim(std::string_view(line).substr(0, tab));
    std::string right = trim(std::string_view(line).substr(tab + 1));
    if (left.empty() || right.empty())
      throw Error("pair file line " + std::to_string(line_no) + ": empty pair member");
    out.pairs.push_back({std::move(left), std::move(right)});
  }
  return out;
}

BoundaryPairList read_pairs_file(const std::string& path, Role role) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open pair file: " + path);
  return read_pairs(in, path, role);
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j{
      {"n_common", report.n_common},
      {"n_candidate", report.n_candidate},
      {"n_reference", report.n_reference},
      {"precision", report.precision},
      {"recall", report.recall},
      {"f_score", report.f_score},
      {"rounded",
       {{"precision", round3(report.precision)},
        {"recall", round3(report.recall)},
        {"f_score", round3(report.f_score)}}},
  };
  return j.dump(2);
}

std::string format_report_table(std::span<const std::pair<std::string, EvalReport>> rows) {
  std::size_t label_width = std::string_view("system").size();
  for (const auto& [label, report] : rows) label_width = std::max(label_width, label.size());

  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-*s  %6s  %6s  %6s  %6s  %6s  %6s\n",
                int(label_width), "system", "cand", "ref", "common", "P", "R", "F");
  out << buf;
  for (const auto& [label, r] : rows) {
    std::snprintf(buf, sizeof(buf), "%-*s  %6zu  %6zu  %6zu  %6.3f  %6.3f  %6.3f\n",
                  int(label_width), label.c_str(), r.n_candidate, r.n_reference, r.n_common,
                  r.precision, r.recall, r.f_score);
    out << buf;
  }
  return out.str();
}

}  // namespace eduseg
