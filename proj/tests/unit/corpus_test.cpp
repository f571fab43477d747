#include <filesystem>

#include "doctest.h"
#include "proxylang/corpus.hpp"

using namespace proxylang;

namespace {

std::filesystem::path corpus_dir() { return std::filesystem::path(PROXYLANG_TESTS_DIR) / "corpus"; }

}  // namespace

TEST_CASE("serial and parallel runners agree") {
  auto entries = discover_corpus(corpus_dir());
  REQUIRE(entries.size() >= 20);
  for (auto mode : {EqualityMode::Opaque, EqualityMode::Trap}) {
    CorpusSettings settings;
    settings.mode = mode;
    auto serial = run_corpus_serial(entries, settings);
    auto parallel = run_corpus_parallel(entries, settings);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].script == parallel[i].script);
      CHECK(serial[i].mode == parallel[i].mode);
      CHECK(serial[i].actual == parallel[i].actual);
      CHECK(serial[i].passed == parallel[i].passed);
      CHECK(serial[i].passed);
    }
  }
}

TEST_CASE("discovery is sorted and pairs scripts with expectations") {
  auto entries = discover_corpus(corpus_dir());
  for (std::size_t i = 1; i < entries.size(); ++i) CHECK(entries[i - 1].script < entries[i].script);
  for (const auto& e : entries) {
    CHECK(e.script.extension() == ".plx");
    CHECK(e.expected.stem() == e.script.stem());
  }
}

TEST_CASE("declared mode header") {
  CHECK(declared_mode("// mode: trap\nprint(1);") == EqualityMode::Trap);
  CHECK(declared_mode("// mode: operators") == EqualityMode::Operators);
  CHECK_FALSE(declared_mode("print(1);\n// mode: trap").has_value());
  CHECK_FALSE(declared_mode("// mode: bogus\n").has_value());
  CHECK_FALSE(declared_mode("").has_value());
}

TEST_CASE("declared mode wins unless disabled") {
  const char* src = "// mode: trap\nvar o = {};\n"
                    "print(new Proxy(o, {isTransparent: function () { return true; }}) === o);";
  CorpusSettings settings;
  EqualityMode used{};
  CHECK(run_script_transcript(src, settings, &used) == "true\n");
  CHECK(used == EqualityMode::Trap);
  settings.honor_declared_mode = false;
  CHECK(run_script_transcript(src, settings, &used) == "false\n");
  CHECK(used == EqualityMode::Opaque);
}

TEST_CASE("transcripts end with the uncaught error") {
  CorpusSettings settings;
  CHECK(run_script_transcript("print(1);\nnope;", settings) ==
        "1\nuncaught ReferenceError at 2:1: 'nope' is not defined\n");
}

TEST_CASE("newline normalization") {
  CHECK(normalize_newlines("a\r\nb\r\n") == "a\nb\n");
  CHECK(normalize_newlines("a\rb") == "a\nb");
  CHECK(normalize_newlines("") == "");
}
