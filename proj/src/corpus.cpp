#include "proxylang/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace proxylang {

namespace fs = std::filesystem;

std::vector<CorpusEntry> discover_corpus(const fs::path& dir) {
  std::vector<CorpusEntry> entries;
  for (const auto& item : fs::recursive_directory_iterator(dir)) {
    if (!item.is_regular_file() || item.path().extension() != ".plx") continue;
    fs::path expected = item.path();
    expected.replace_extension(".expected");
    if (fs::exists(expected)) entries.push_back({item.path(), expected});
  }
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.script < b.script; });
  return entries;
}

std::optional<EqualityMode> declared_mode(std::string_view source) {
  std::string_view first = source.substr(0, source.find('\n'));
  if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  constexpr std::string_view prefix = "// mode:";
  if (!first.starts_with(prefix)) return std::nullopt;
  first.remove_prefix(prefix.size());
  while (!first.empty() && first.front() == ' ') first.remove_prefix(1);
  while (!first.empty() && first.back() == ' ') first.remove_suffix(1);
  return parse_equality_mode(first);
}

std::string transcript(const ExecutionResult& result) {
  std::string out = result.output;
  if (result.error) out += "uncaught " + result.error->diagnostic() + "\n";
  return out;
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out += '\n';
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out += text[i];
    }
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run_script_transcript(std::string_view source, const CorpusSettings& settings,
                                  EqualityMode* used_mode) {
  EqualityMode mode = settings.mode;
  if (settings.honor_declared_mode) {
    if (auto declared = declared_mode(source)) mode = *declared;
  }
  if (used_mode) *used_mode = mode;
  InterpreterOptions options;
  options.mode = mode;
  options.trap_policy = settings.trap_policy;
  options.load_prelude = settings.load_prelude;
  options.prelude_source = settings.prelude_source;
  Interpreter interp(std::move(options));
  return transcript(interp.run(source));
}

namespace {

CorpusOutcome run_entry(const CorpusEntry& entry, const CorpusSettings& settings) {
  CorpusOutcome outcome;
  outcome.script = entry.script;
  outcome.mode = settings.mode;
  try {
    outcome.expected = normalize_newlines(read_file(entry.expected));
    outcome.actual =
        normalize_newlines(run_script_transcript(read_file(entry.script), settings, &outcome.mode));
  } catch (const std::exception& e) {
    outcome.actual = std::string("runner error: ") + e.what() + "\n";
  }
  outcome.passed = outcome.actual == outcome.expected;
  return outcome;
}

}  // namespace

std::vector<CorpusOutcome> run_corpus_serial(std::span<const CorpusEntry> entries,
                                             const CorpusSettings& settings) {
  std::vector<CorpusOutcome> outcomes;
  outcomes.reserve(entries.size());
  for (const auto& entry : entries) outcomes.push_back(run_entry(entry, settings));
  return outcomes;
}

std::vector<CorpusOutcome> run_corpus_parallel(std::span<const CorpusEntry> entries,
                                               const CorpusSettings& settings) {
  std::vector<CorpusOutcome> outcomes(entries.size());
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = run_entry(entries[static_cast<std::size_t>(i)], settings);
  }
  return outcomes;
}

}  // namespace proxylang
