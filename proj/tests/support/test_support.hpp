#pragma once

// Helpers shared by the unit and acceptance suites. Nothing here calls into
// the equality or proxy-resolution code it is used to check.

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "proxylang/interpreter.hpp"

namespace proxylang::testing {

inline ExecutionResult run_script(std::string_view source,
                                  EqualityMode mode = EqualityMode::Opaque) {
  InterpreterOptions options;
  options.mode = mode;
  Interpreter interp(options);
  return interp.run(source);
}

inline Value make_native(Interpreter& interp,
                         std::function<Value(std::span<const Value>)> fn) {
  return interp.alloc_native("test", [fn = std::move(fn)](Interpreter&, const Value&,
                                                          std::span<const Value> args) {
    return fn(args);
  });
}

/// isTransparent configuration of one generated proxy.
enum class TrapKind { Absent, ReturnsFalse, ReturnsTrue };

/// One node of a generated heap: an ordinary object (parent < 0) or a proxy
/// over an earlier node.
struct NodeSpec {
  int parent = -1;
  TrapKind trap = TrapKind::Absent;
  bool revoked = false;
};

using HeapSpec = std::vector<NodeSpec>;

/// Objects plus proxy chains of length at most max_chain. Proxies pick a
/// random earlier node as target, so sharing and forks occur.
inline HeapSpec random_heap_spec(std::mt19937& rng, int max_chain = 4, int objects = 3,
                                 int proxies = 9, double revoke_rate = 0.1) {
  HeapSpec spec;
  std::vector<int> chain_len;
  for (int i = 0; i < objects; ++i) {
    spec.push_back({});
    chain_len.push_back(0);
  }
  std::uniform_int_distribution<int> trap_dist(0, 2);
  std::bernoulli_distribution revoke(revoke_rate);
  for (int i = 0; i < proxies; ++i) {
    std::vector<int> eligible;
    for (int n = 0; n < static_cast<int>(spec.size()); ++n) {
      if (chain_len[n] < max_chain) eligible.push_back(n);
    }
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    int parent = eligible[pick(rng)];
    spec.push_back({parent, static_cast<TrapKind>(trap_dist(rng)), revoke(rng)});
    chain_len.push_back(chain_len[parent] + 1);
  }
  return spec;
}

/// Allocates the heap described by spec; returns one ref per node.
inline std::vector<Value> materialize(Interpreter& interp, const HeapSpec& spec) {
  std::vector<Value> refs;
  for (const auto& node : spec) {
    if (node.parent < 0) {
      refs.emplace_back(interp.alloc_object());
      continue;
    }
    ObjectRef handler = interp.alloc_object();
    if (node.trap != TrapKind::Absent) {
      bool answer = node.trap == TrapKind::ReturnsTrue;
      interp.heap().at(handler).ordinary().properties.set(
          "isTransparent", make_native(interp, [answer](std::span<const Value>) -> Value {
            return answer;
          }));
    }
    Value proxy = interp.proxy_create(refs[static_cast<std::size_t>(node.parent)], handler);
    if (node.revoked) interp.revoke(proxy);
    refs.push_back(proxy);
  }
  return refs;
}

/// Identity representative of node i, computed from the HeapSpec alone.
inline int oracle_representative(const HeapSpec& spec, int i, EqualityMode mode) {
  while (spec[i].parent >= 0 && !spec[i].revoked) {
    if (mode == EqualityMode::Opaque) break;
    if (mode == EqualityMode::Trap && spec[i].trap != TrapKind::ReturnsTrue) break;
    i = spec[i].parent;
  }
  return i;
}

inline constexpr EqualityMode kAllModes[] = {EqualityMode::Opaque, EqualityMode::Transparent,
                                             EqualityMode::Operators, EqualityMode::Trap};

}  // namespace proxylang::testing
