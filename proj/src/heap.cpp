#include "proxylang/heap.hpp"

#include <limits>
#include <stdexcept>

namespace proxylang {

Value* Environment::find(std::string_view name) {
  for (Environment* env = this; env; env = env->parent.get()) {
    auto it = env->bindings.find(std::string(name));
    if (it != env->bindings.end()) return &it->second;
  }
  return nullptr;
}

const Value* Environment::this_binding() const {
  for (const Environment* env = this; env; env = env->parent.get()) {
    if (env->this_value) return &*env->this_value;
  }
  return nullptr;
}

const Value* PropertyTable::find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? nullptr : &slots_[it->second].second;
}

void PropertyTable::set(std::string_view key, Value value) {
  std::string k(key);
  auto it = index_.find(k);
  if (it != index_.end()) {
    slots_[it->second].second = std::move(value);
    return;
  }
  index_.emplace(k, slots_.size());
  slots_.emplace_back(std::move(k), std::move(value));
}

bool PropertyTable::erase(std::string_view key) {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) return false;
  std::size_t at = it->second;
  index_.erase(it);
  slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(at));
  for (auto& [name, slot] : index_) {
    if (slot > at) --slot;
  }
  return true;
}

std::vector<std::string> PropertyTable::keys() const {
  std::vector<std::string> out;
  out.reserve(slots_.size());
  for (const auto& [k, v] : slots_) out.push_back(k);
  return out;
}

ObjectRef Heap::allocate(HeapObject object) {
  if (objects_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("heap exhausted");
  }
  objects_.push_back(std::move(object));
  return ObjectRef{static_cast<std::uint32_t>(objects_.size() - 1)};
}

}  // namespace proxylang
