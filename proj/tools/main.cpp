// eduseg command line: segment documents, evaluate candidate segmentations
// against references, compute annotator agreement, inspect lexicons.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eduseg/errors.hpp"
#include "eduseg/eval.hpp"
#include "eduseg/lexicon.hpp"
#include "eduseg/segmenter.hpp"
#include "eduseg/utf8.hpp"

namespace fs = std::filesystem;
using namespace eduseg;

namespace {

#ifndef EDUSEG_DEFAULT_LEXICON_DIR
#define EDUSEG_DEFAULT_LEXICON_DIR ""
#endif

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);
  if (!utf8::valid(text)) throw EncodingError("not valid UTF-8: " + path);
  return text;
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string doc_id_of(const std::string& path) { return fs::path(path).stem().string(); }

// Shared run parameters (the spec's RunConfig).
struct RunConfig {
  std::string language = "fr";
  std::string lexicon_path;  // empty: resolve via language
  std::string strategy = "mu";
  std::string pos = "none";  // none | fallback | pretagged:<path>
  std::string tagmap_path;
  bool include_comma_marker = false;
};

void add_run_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--language", cfg.language, "Language id used to resolve the lexicon")
      ->capture_default_str();
  cmd->add_option("--lexicon", cfg.lexicon_path, "Marker lexicon file");
  cmd->add_option("--strategy", cfg.strategy, "Segmentation strategy")
      ->check(CLI::IsMember({"mu", "mu-v", "mu-vn"}))
      ->capture_default_str();
  cmd->add_option("--pos", cfg.pos,
                  "POS source: none, fallback, or pretagged:<path> "
                  "(one token per line `word<TAB>tag`, blank line = sentence break)")
      ->capture_default_str();
  cmd->add_option("--tagmap", cfg.tagmap_path, "Fine-to-coarse tag map file");
  cmd->add_flag("--include-comma-marker", cfg.include_comma_marker,
                "Keep the bare ',' lexicon record (every comma becomes a boundary)");
}

// Lexicon lookup order: explicit path, then $EDUSEG_LEXICON_DIR/<lang>.lex,
// then the bundled data directory.
std::string resolve_lexicon_path(const RunConfig& cfg) {
  if (!cfg.lexicon_path.empty()) return cfg.lexicon_path;
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("EDUSEG_LEXICON_DIR")) dirs.push_back(env);
  dirs.push_back(EDUSEG_DEFAULT_LEXICON_DIR);
  for (const std::string& dir : dirs) {
    if (dir.empty()) continue;
    fs::path candidate = fs::path(dir) / (cfg.language + ".lex");
    if (fs::exists(candidate)) return candidate.string();
  }
  throw Error("no lexicon found for language '" + cfg.language +
              "' (use --lexicon or set EDUSEG_LEXICON_DIR)");
}

MarkerLexicon load_lexicon(const RunConfig& cfg) {
  LexiconOptions options;
  options.include_comma_marker = cfg.include_comma_marker;
  return MarkerLexicon::load_file(resolve_lexicon_path(cfg), cfg.language, options);
}

PosSource make_pos_source(const RunConfig& cfg) {
  if (cfg.pos == "none") return NoPosSource{};
  if (cfg.pos == "fallback") return FallbackPosSource{};
  if (cfg.pos.rfind("pretagged:", 0) == 0) {
    std::string path = cfg.pos.substr(10);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read pre-tagged file: " + path);
    PretaggedPosSource source;
    source.sentences = read_pretagged(in);
    if (!cfg.tagmap_path.empty()) {
      std::ifstream map_in(cfg.tagmap_path, std::ios::binary);
      if (!map_in) throw Error("cannot read tag map: " + cfg.tagmap_path);
      source.tagmap = TagMap::load(map_in);
    } else {
      source.tagmap = TagMap::treetagger_defaults();
    }
    return source;
  }
  throw Error("bad --pos value '" + cfg.pos + "' (none, fallback, pretagged:<path>)");
}

int cmd_segment(const RunConfig& cfg, const std::vector<std::string>& inputs,
                const std::string& output_dir) {
  MarkerLexicon lexicon = load_lexicon(cfg);
  Strategy strategy = strategy_from_name(cfg.strategy);
  if (std::holds_alternative<PretaggedPosSource>(make_pos_source(cfg)) && inputs.size() > 1)
    throw Error("--pos pretagged: applies to a single input file");

  for (const std::string& input : inputs) {
    std::string text = read_file(input);
    SegmentedDocument doc = segment(text, lexicon, strategy, make_pos_source(cfg));

    fs::path out_path = output_dir.empty()
                            ? fs::path(input + ".seg")
                            : fs::path(output_dir) / (fs::path(input).filename().string() + ".seg");
    if (!output_dir.empty()) fs::create_directories(output_dir);
    write_file(out_path.string(), to_bracket_format(doc));
    std::cout << out_path.string() << ": " << doc.segments.size() << " segments\n";
  }
  return 0;
}

// Pair lists for evaluate/agreement, keyed by document id (filename stem).
std::map<std::string, BoundaryPairList> load_pair_lists(const std::vector<std::string>& paths,
                                                        bool segments_mode, Role role) {
  std::map<std::string, BoundaryPairList> lists;
  for (const std::string& path : paths) {
    std::string id = doc_id_of(path);
    BoundaryPairList list;
    if (segments_mode) {
      auto brackets = parse_bracket_format(read_file(path));
      std::vector<std::string> texts;
      texts.reserve(brackets.size());
      for (auto& b : brackets) texts.push_back(std::move(b.text));
      list = pairs_from_segments(texts, id, role);
    } else {
      list = read_pairs_file(path, role);
      list.doc_id = id;
    }
    if (lists.count(id)) throw Error("duplicate document id '" + id + "' from " + path);
    lists.emplace(id, std::move(list));
  }
  return lists;
}

nlohmann::json report_json(const EvalReport& r) {
  return nlohmann::json::parse(report_to_json(r));
}

std::vector<std::pair<std::string, EvalReport>> table_rows(const CorpusReport& corpus) {
  std::vector<std::pair<std::string, EvalReport>> rows;
  for (const auto& [id, report] : corpus.per_document) rows.emplace_back(id, report);
  if (corpus.per_document.size() > 1) rows.emplace_back("overall", corpus.overall);
  return rows;
}

int cmd_evaluate(const std::vector<std::string>& references,
                 const std::vector<std::string>& candidates, bool segments_mode,
                 bool as_table) {
  // A single reference/candidate pair is compared directly; with more files
  // documents are matched by filename stem.
  CorpusReport corpus;
  if (references.size() == 1 && candidates.size() == 1) {
    auto refs = load_pair_lists(references, segments_mode, Role::Reference);
    auto cands = load_pair_lists(candidates, segments_mode, Role::Candidate);
    EvalReport report = score(refs.begin()->second, cands.begin()->second);
    corpus.overall = report;
    corpus.per_document.emplace_back(cands.begin()->first, report);
  } else {
    corpus = corpus_report(load_pair_lists(references, segments_mode, Role::Reference),
                           load_pair_lists(candidates, segments_mode, Role::Candidate));
  }

  if (as_table) {
    std::cout << format_report_table(table_rows(corpus));
  } else {
    nlohmann::json j = report_json(corpus.overall);
    if (corpus.per_document.size() > 1) {
      nlohmann::json per;
      for (const auto& [id, report] : corpus.per_document) per[id] = report_json(report);
      j["per_document"] = per;
    }
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_agreement(const std::vector<std::string>& set_a, const std::vector<std::string>& set_b,
                  bool segments_mode, bool as_table) {
  if (set_a.size() != 1 || set_b.size() != 1)
    throw Error("agreement compares exactly one file per annotator");
  auto a = load_pair_lists(set_a, segments_mode, Role::Reference).begin()->second;
  auto b = load_pair_lists(set_b, segments_mode, Role::Reference).begin()->second;
  auto [a_ref, b_ref] = agreement(a, b);

  if (as_table) {
    std::vector<std::pair<std::string, EvalReport>> rows{{"a-as-reference", a_ref},
                                                         {"b-as-reference", b_ref}};
    std::cout << format_report_table(rows);
  } else {
    nlohmann::json j{{"a_as_reference", report_json(a_ref)},
                     {"b_as_reference", report_json(b_ref)}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_lexicon(const std::string& action, const std::string& path, const RunConfig& cfg) {
  LexiconOptions options;
  options.include_comma_marker = cfg.include_comma_marker;

  if (action == "validate") {
    // Line-level checks first so problems come with line numbers.
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::string line;
    std::size_t line_no = 0;
    std::size_t problems = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      if (!utf8::valid(line)) {
        std::cout << "line " << line_no << ": invalid UTF-8\n";
        ++problems;
      }
    }
    if (problems) return 1;
    try {
      MarkerLexicon lexicon = MarkerLexicon::load_file(path, cfg.language, options);
      std::cout << "OK: " << lexicon.size() << " entries (" << lexicon.elided_count()
                << " elided, max length " << lexicon.max_len() << ")\n";
      return 0;
    } catch (const EmptyLexiconError&) {
      std::cout << "0 entries\n";
      return 1;
    }
  }

  MarkerLexicon lexicon = MarkerLexicon::load_file(path, cfg.language, options);
  if (action == "expand") {
    for (const MarkerEntry& entry : lexicon.entries()) std::cout << entry.joined() << "\n";
    return 0;
  }
  if (action == "stats") {
    std::cout << "entries " << lexicon.size() << "\n"
              << "max_len " << lexicon.max_len() << "\n"
              << "elided " << lexicon.elided_count() << "\n";
    return 0;
  }
  throw Error("unknown lexicon action '" + action + "'");  // unreachable: CLI validates
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based discourse segmentation into elementary discourse units"};
  app.require_subcommand(1);
  int rc = 0;

  // segment
  RunConfig seg_cfg;
  std::vector<std::string> seg_inputs;
  std::string seg_output_dir;
  CLI::App* seg = app.add_subcommand("segment", "Segment text files into EDUs");
  seg->add_option("inputs", seg_inputs, "UTF-8 text files")->required()->expected(-1);
  add_run_flags(seg, seg_cfg);
  seg->add_option("--output", seg_output_dir, "Directory for .seg files (default: beside input)");
  seg->callback([&] { rc = cmd_segment(seg_cfg, seg_inputs, seg_output_dir); });

  // evaluate
  std::vector<std::string> eval_refs, eval_cands;
  bool eval_pairs = false, eval_segments = false, eval_json = false, eval_table = false;
  CLI::App* ev = app.add_subcommand("evaluate", "Score candidate boundaries against a reference");
  ev->add_option("--reference", eval_refs, "Reference file(s)")->required()->expected(-1);
  ev->add_option("--candidate", eval_cands, "Candidate file(s)")->required()->expected(-1);
  CLI::Option* opt_pairs = ev->add_flag("--pairs", eval_pairs, "Inputs are pair files");
  CLI::Option* opt_segments =
      ev->add_flag("--segments", eval_segments, "Inputs are bracketed .seg files");
  opt_pairs->excludes(opt_segments);
  ev->add_flag("--json", eval_json, "JSON report (default)");
  ev->add_flag("--table", eval_table, "Aligned text table instead of JSON")->excludes("--json");
  ev->callback([&] {
    if (!eval_pairs && !eval_segments)
      throw CLI::ValidationError("evaluate", "pass one of --pairs / --segments");
    rc = cmd_evaluate(eval_refs, eval_cands, eval_segments, eval_table);
  });

  // agreement
  std::vector<std::string> agr_a, agr_b;
  bool agr_pairs = false, agr_segments = false, agr_json = false, agr_table = false;
  CLI::App* ag = app.add_subcommand("agreement", "Compare two annotators in both directions");
  ag->add_option("--set-a,-a", agr_a, "Annotator A file")->required();
  ag->add_option("--set-b,-b", agr_b, "Annotator B file")->required();
  CLI::Option* a_pairs = ag->add_flag("--pairs", agr_pairs, "Inputs are pair files");
  CLI::Option* a_segments =
      ag->add_flag("--segments", agr_segments, "Inputs are bracketed .seg files");
  a_pairs->excludes(a_segments);
  ag->add_flag("--json", agr_json, "JSON report (default)");
  ag->add_flag("--table", agr_table, "Aligned text table instead of JSON")->excludes("--json");
  ag->callback([&] {
    if (!agr_pairs && !agr_segments)
      throw CLI::ValidationError("agreement", "pass one of --pairs / --segments");
    rc = cmd_agreement(agr_a, agr_b, agr_segments, agr_table);
  });

  // lexicon
  RunConfig lex_cfg;
  std::string lex_action, lex_path;
  CLI::App* lx = app.add_subcommand("lexicon", "Expand, validate or summarize a marker lexicon");
  lx->add_option("action", lex_action, "expand | validate | stats")
      ->required()
      ->check(CLI::IsMember({"expand", "validate", "stats"}));
  lx->add_option("path", lex_path, "Lexicon file")->required();
  lx->add_flag("--include-comma-marker", lex_cfg.include_comma_marker,
               "Keep the bare ',' record");
  lx->add_option("--language", lex_cfg.language, "Language id")->capture_default_str();
  lx->callback([&] { rc = cmd_lexicon(lex_action, lex_path, lex_cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
