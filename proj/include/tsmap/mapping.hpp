// Copyright 2026 The tsmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace tsmap {

inline constexpr int kUnmapped = -1;

/**
 * Injective assignment of logical qubits to physical qubits, kept together
 * with its inverse. Either side may hold kUnmapped entries.
 */
class Mapping {
 public:
  Mapping() = default;
  Mapping(int num_logical, int num_physical);

  /// Builds a mapping from a logical->physical table. Throws on collisions.
  static Mapping from_vector(const std::vector<int>& to_physical, int num_physical);

  [[nodiscard]] int num_logical() const { return static_cast<int>(to_phys_.size()); }
  [[nodiscard]] int num_physical() const { return static_cast<int>(to_log_.size()); }

  [[nodiscard]] int physical(int logical) const {
    return to_phys_[static_cast<std::size_t>(logical)];
  }
  [[nodiscard]] int logical(int physical) const {
    return to_log_[static_cast<std::size_t>(physical)];
  }
  [[nodiscard]] bool is_free(int physical) const { return logical(physical) == kUnmapped; }

  void assign(int logical, int physical);
  void unassign(int logical);

  /// Exchanges whatever occupies two physical slots, including free slots.
  void swap_physical(int a, int b);

  [[nodiscard]] int mapped_count() const;
  [[nodiscard]] bool is_total() const { return mapped_count() == num_logical(); }

  /// Empty when to_physical and to_logical agree and assignments are injective.
  [[nodiscard]] std::string check_consistency() const;

  [[nodiscard]] const std::vector<int>& to_physical() const { return to_phys_; }
  [[nodiscard]] const std::vector<int>& to_logical() const { return to_log_; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Mapping& a, const Mapping& b) {
    return a.to_phys_ == b.to_phys_ && a.to_log_ == b.to_log_;
  }

 private:
  std::vector<int> to_phys_;
  std::vector<int> to_log_;
};

}  // namespace tsmap
