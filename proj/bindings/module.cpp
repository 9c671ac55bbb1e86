// Python bindings: the segmentation pipeline and the evaluation harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <utility>
#include <vector>

#include "eduseg/errors.hpp"
#include "eduseg/eval.hpp"
#include "eduseg/lexicon.hpp"
#include "eduseg/segmenter.hpp"
#include "eduseg/textproc.hpp"

namespace py = pybind11;
using namespace eduseg;

namespace {

MarkerLexicon lexicon_from_file(const std::string& path, const std::string& language,
                                bool include_comma_marker) {
  LexiconOptions options;
  options.include_comma_marker = include_comma_marker;
  return MarkerLexicon::load_file(path, language, options);
}

MarkerLexicon lexicon_from_markers(const std::vector<std::string>& markers,
                                   const std::string& language, bool include_comma_marker) {
  LexiconOptions options;
  options.include_comma_marker = include_comma_marker;
  return MarkerLexicon::from_markers(markers, language, options);
}

PosSource pos_source_from_name(const std::string& pos) {
  if (pos == "none") return NoPosSource{};
  if (pos == "fallback") return FallbackPosSource{};
  throw Error("pos must be 'none' or 'fallback' (pre-tagged input: use segment_pretagged)");
}

SegmentedDocument segment_text(const std::string& text, const MarkerLexicon& lexicon,
                               const std::string& strategy, const std::string& pos) {
  return segment(text, lexicon, strategy_from_name(strategy), pos_source_from_name(pos));
}

SegmentedDocument segment_pretagged_text(
    const std::string& text, const MarkerLexicon& lexicon, const std::string& strategy,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& tagged,
    const std::optional<std::string>& tagmap_path) {
  PretaggedPosSource source;
  for (const auto& sentence : tagged) {
    std::vector<PretaggedToken> out;
    out.reserve(sentence.size());
    for (const auto& [surface, tag] : sentence) out.push_back({surface, tag});
    source.sentences.push_back(std::move(out));
  }
  if (tagmap_path) {
    std::ifstream in(*tagmap_path, std::ios::binary);
    if (!in) throw Error("cannot read tag map: " + *tagmap_path);
    source.tagmap = TagMap::load(in);
  } else {
    source.tagmap = TagMap::treetagger_defaults();
  }
  return segment(text, lexicon, strategy_from_name(strategy), source);
}

BoundaryPairList pairs_from_list(const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::string& doc_id) {
  BoundaryPairList list;
  list.doc_id = doc_id;
  for (const auto& [left, right] : pairs) list.pairs.push_back({left, right});
  return list;
}

py::dict report_dict(const EvalReport& r) {
  py::dict d;
  d["n_common"] = r.n_common;
  d["n_candidate"] = r.n_candidate;
  d["n_reference"] = r.n_reference;
  d["precision"] = r.precision;
  d["recall"] = r.recall;
  d["f_score"] = r.f_score;
  return d;
}

}  // namespace

PYBIND11_MODULE(_eduseg, m) {
  m.doc() = "Rule-based discourse segmentation into elementary discourse units";

  py::register_exception<Error>(m, "EdusegError", PyExc_RuntimeError);

  py::class_<MarkerEntry>(m, "MarkerEntry")
      .def_readonly("surface", &MarkerEntry::surface)
      .def_readonly("elided", &MarkerEntry::elided)
      .def("joined", &MarkerEntry::joined)
      .def("__repr__",
           [](const MarkerEntry& e) { return "MarkerEntry('" + e.joined() + "')"; });

  py::class_<MarkerLexicon>(m, "MarkerLexicon")
      .def_static("load_file", &lexicon_from_file, py::arg("path"), py::arg("language") = "fr",
                  py::arg("include_comma_marker") = false)
      .def_static("from_markers", &lexicon_from_markers, py::arg("markers"),
                  py::arg("language") = "fr", py::arg("include_comma_marker") = false)
      .def_property_readonly("language", &MarkerLexicon::language)
      .def_property_readonly("max_len", &MarkerLexicon::max_len)
      .def_property_readonly("elided_count", &MarkerLexicon::elided_count)
      .def("entries", &MarkerLexicon::entries)
      .def("__len__", &MarkerLexicon::size)
      // the str overload must come first: a str is also a sequence of str,
      // so the list caster would otherwise swallow it one character at a time
      .def("__contains__",
           [](const MarkerLexicon& lex, const std::string& marker) {
             return lex.contains(tokenize_words(normalize_word(marker)));
           })
      .def("__contains__", [](const MarkerLexicon& lex, const std::vector<std::string>& words) {
        return lex.contains(words);
      });

  m.def("expand_elision", &expand_elision, py::arg("entry"),
        "Entry plus its elision companion, when the final word is elided.");

  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("norm", &Token::norm)
      .def_readonly("char_start", &Token::char_start)
      .def_readonly("char_end", &Token::char_end)
      .def_property_readonly(
          "pos", [](const Token& t) -> std::optional<std::string> {
            if (!t.pos) return std::nullopt;
            return std::string(pos_name(*t.pos));
          })
      .def("__repr__", [](const Token& t) { return "Token('" + t.surface + "')"; });

  py::class_<Segment>(m, "Segment")
      .def_readonly("sentence", &Segment::sentence)
      .def_readonly("begin", &Segment::begin)
      .def_readonly("end", &Segment::end)
      .def_readonly("id", &Segment::id);

  py::class_<SegmentedDocument>(m, "SegmentedDocument")
      .def_readonly("segments", &SegmentedDocument::segments)
      .def_property_readonly("strategy",
                             [](const SegmentedDocument& d) {
                               return std::string(strategy_name(d.strategy));
                             })
      .def("segment_texts",
           [](const SegmentedDocument& d) {
             std::vector<std::string> texts;
             texts.reserve(d.segments.size());
             for (const Segment& s : d.segments) texts.push_back(d.segment_text(s));
             return texts;
           })
      .def("to_bracket", [](const SegmentedDocument& d) { return to_bracket_format(d); })
      .def("__len__", [](const SegmentedDocument& d) { return d.segments.size(); });

  m.def("segment", &segment_text, py::arg("text"), py::arg("lexicon"),
        py::arg("strategy") = "mu", py::arg("pos") = "none",
        "Segment text into elementary discourse units.");
  m.def("segment_pretagged", &segment_pretagged_text, py::arg("text"), py::arg("lexicon"),
        py::arg("strategy"), py::arg("tagged_sentences"), py::arg("tagmap_path") = std::nullopt,
        "Segment with POS tags supplied as [(surface, fine_tag), ...] per sentence.");

  m.def("split_sentences", &split_sentences, py::arg("text"));
  m.def(
      "tokenize",
      [](const std::string& sentence) { return tokenize(sentence); },
      py::arg("sentence"));

  m.def(
      "extract_pairs",
      [](const SegmentedDocument& doc, const std::string& doc_id) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const BoundaryPair& p : extract_pairs(doc, doc_id).pairs)
          out.emplace_back(p.left, p.right);
        return out;
      },
      py::arg("doc"), py::arg("doc_id") = "",
      "Boundary word pairs (last word left segment, first word right segment).");

  m.def(
      "score",
      [](const std::vector<std::pair<std::string, std::string>>& reference,
         const std::vector<std::pair<std::string, std::string>>& candidate) {
        return report_dict(
            score(pairs_from_list(reference, "ref"), pairs_from_list(candidate, "cand")));
      },
      py::arg("reference"), py::arg("candidate"),
      "Precision / recall / F-score over boundary word pairs.");

  m.def(
      "agreement",
      [](const std::vector<std::pair<std::string, std::string>>& a,
         const std::vector<std::pair<std::string, std::string>>& b) {
        auto [a_ref, b_ref] =
            agreement(pairs_from_list(a, "a"), pairs_from_list(b, "b"));
        return py::make_tuple(report_dict(a_ref), report_dict(b_ref));
      },
      py::arg("a"), py::arg("b"), "Both scoring directions for two annotators.");
}
