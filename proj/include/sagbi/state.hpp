#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sagbi/subalgebra.hpp"

namespace sagbi {

inline constexpr int kStateFormatVersion = 1;

/// Ordered key/value pairs of a state file; repeated keys hold list entries.
using StateFields = std::vector<std::pair<std::string, std::string>>;

struct LoadedState {
  std::string name;
  std::string ringName;
  SagbiBasis basis;
};

StateFields stateFields(const SagbiBasis& sb, std::string_view name = {}, std::string_view ringName = {});
std::string serializeState(const SagbiBasis& sb, std::string_view name = {}, std::string_view ringName = {});

/// Parses a state file. When `ring` is equivalent to the stored ring it is
/// reused, so the loaded polynomials are compatible with existing ones.
LoadedState parseState(std::string_view text, const RingPtr& ring = nullptr);

void saveState(const SagbiBasis& sb, const std::filesystem::path& path, std::string_view name = {},
               std::string_view ringName = {});
LoadedState loadState(const std::filesystem::path& path, const RingPtr& ring = nullptr);

}  // namespace sagbi
