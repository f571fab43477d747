// proxylang: run scripts, a REPL, or a conformance corpus.

#include <unistd.h>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "proxylang/corpus.hpp"
#include "proxylang/interpreter.hpp"
#include "proxylang/parser.hpp"

namespace fs = std::filesystem;
using namespace proxylang;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntimeError = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string mode_name = "opaque";
  std::string trap_policy_name = "honor";
  std::string prelude_path;
  bool no_prelude = false;
  std::string script_path;
  std::string corpus_dir;
  bool serial = false;
};

bool is_static_error(const ScriptError& err) {
  return err.kind() == ErrorKind::LexError || err.kind() == ErrorKind::ParseError;
}

InterpreterOptions interpreter_options(const CliConfig& cfg) {
  InterpreterOptions options;
  options.mode = *parse_equality_mode(cfg.mode_name);
  options.trap_policy = *parse_trap_policy(cfg.trap_policy_name);
  options.load_prelude = !cfg.no_prelude;
  if (!cfg.prelude_path.empty()) options.prelude_source = read_file(cfg.prelude_path);
  return options;
}

int run_command(const CliConfig& cfg) {
  std::string source = read_file(cfg.script_path);
  Interpreter interp(interpreter_options(cfg));
  ExecutionResult result = interp.run(source);
  std::cout << result.output << std::flush;
  if (result.ok()) return kExitOk;
  std::cerr << cfg.script_path << ": " << result.error->diagnostic() << "\n";
  return is_static_error(*result.error) ? kExitUsage : kExitRuntimeError;
}

int repl_command(const CliConfig& cfg) {
  Interpreter interp(interpreter_options(cfg));
  const bool interactive = isatty(STDIN_FILENO);
  std::string pending;
  std::string line;
  auto prompt = [&] {
    if (interactive) std::cout << (pending.empty() ? "> " : "... ") << std::flush;
  };
  prompt();
  while (std::getline(std::cin, line)) {
    pending += line;
    pending += '\n';
    ast::Program program;
    try {
      program = parse_source(pending);
    } catch (const ScriptError& err) {
      if (err.kind() == ErrorKind::ParseError &&
          err.message().starts_with(kUnexpectedEnd)) {
        prompt();
        continue;
      }
      std::cerr << err.diagnostic() << "\n";
      pending.clear();
      prompt();
      continue;
    }
    pending.clear();
    std::size_t printed = interp.output().size();
    try {
      std::optional<Value> value = interp.evaluate_repl(program);
      std::cout << interp.output().substr(printed);
      if (value) std::cout << render(*value) << "\n";
    } catch (const ScriptError& err) {
      std::cout << interp.output().substr(printed);
      std::cerr << err.diagnostic() << "\n";
    }
    std::cout << std::flush;
    prompt();
  }
  return kExitOk;
}

int corpus_command(const CliConfig& cfg) {
  CorpusSettings settings;
  settings.mode = *parse_equality_mode(cfg.mode_name);
  settings.trap_policy = *parse_trap_policy(cfg.trap_policy_name);
  settings.load_prelude = !cfg.no_prelude;
  if (!cfg.prelude_path.empty()) settings.prelude_source = read_file(cfg.prelude_path);

  auto entries = discover_corpus(cfg.corpus_dir);
  auto outcomes = cfg.serial ? run_corpus_serial(entries, settings)
                             : run_corpus_parallel(entries, settings);
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    if (o.passed) {
      ++passed;
      continue;
    }
    std::cerr << "FAIL " << o.script.string() << " (mode " << to_string(o.mode) << ")\n"
              << "--- expected\n" << o.expected << "--- actual\n" << o.actual;
  }
  std::size_t failed = outcomes.size() - passed;
  std::cout << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitRuntimeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter for a small object language with proxies"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--equality-mode", cfg.mode_name, "Equality design")
      ->check(CLI::IsMember({"opaque", "transparent", "operators", "trap"}))
      ->capture_default_str();
  app.add_option("--trap-policy", cfg.trap_policy_name,
                 "How isTransparent traps are consulted (testing aid)")
      ->check(CLI::IsMember({"honor", "ignore", "all-true"}))
      ->capture_default_str();
  auto* prelude_opt =
      app.add_option("--prelude", cfg.prelude_path, "Prelude script to load instead of the built-in one")
          ->check(CLI::ExistingFile);
  app.add_flag("--no-prelude", cfg.no_prelude, "Do not load any prelude")->excludes(prelude_opt);

  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("script", cfg.script_path, "Script file (.plx)")->required()->check(CLI::ExistingFile);

  auto* repl = app.add_subcommand("repl", "Interactive read-eval-print loop");

  auto* corpus = app.add_subcommand("corpus", "Run every .plx with a sibling .expected");
  corpus->add_option("dir", cfg.corpus_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  corpus->add_flag("--serial", cfg.serial, "Run entries one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return run_command(cfg);
    if (*repl) return repl_command(cfg);
    if (*corpus) return corpus_command(cfg);
  } catch (const ScriptError& err) {
    std::cerr << "prelude: " << err.diagnostic() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
