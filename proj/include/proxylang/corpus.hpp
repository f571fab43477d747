#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxylang/interpreter.hpp"

namespace proxylang {

/// A script paired with the stdout it must produce.
struct CorpusEntry {
  std::filesystem::path script;
  std::filesystem::path expected;
};

struct CorpusSettings {
  EqualityMode mode = EqualityMode::Opaque;
  TrapPolicy trap_policy = TrapPolicy::Honor;
  bool load_prelude = true;
  std::optional<std::string> prelude_source;
  // Honor a `// mode: <m>` first line over `mode`.
  bool honor_declared_mode = true;
};

struct CorpusOutcome {
  std::filesystem::path script;
  EqualityMode mode;
  std::string actual;
  std::string expected;
  bool passed = false;
};

/// Every `*.plx` under dir that has a sibling `*.expected`, sorted by path.
std::vector<CorpusEntry> discover_corpus(const std::filesystem::path& dir);

/// Mode named by a `// mode: <m>` comment on the first line, if any.
std::optional<EqualityMode> declared_mode(std::string_view source);

/// Printed output, followed by "uncaught <diagnostic>" when the run failed.
std::string transcript(const ExecutionResult& result);

std::string normalize_newlines(std::string_view text);
std::string read_file(const std::filesystem::path& path);

/// Runs a single script in a fresh interpreter and returns its transcript.
std::string run_script_transcript(std::string_view source, const CorpusSettings& settings,
                                  EqualityMode* used_mode = nullptr);

/// Each entry runs in its own interpreter. The serial and parallel runners
/// produce identical outcome vectors (same order, same contents).
std::vector<CorpusOutcome> run_corpus_serial(std::span<const CorpusEntry> entries,
                                             const CorpusSettings& settings);
std::vector<CorpusOutcome> run_corpus_parallel(std::span<const CorpusEntry> entries,
                                               const CorpusSettings& settings);

}  // namespace proxylang
