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

#include "tsmap/mapping.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsmap {

Mapping::Mapping(int num_logical, int num_physical)
    : to_phys_(static_cast<std::size_t>(num_logical), kUnmapped),
      to_log_(static_cast<std::size_t>(num_physical), kUnmapped) {}

Mapping Mapping::from_vector(const std::vector<int>& to_physical, int num_physical) {
  Mapping m(static_cast<int>(to_physical.size()), num_physical);
  for (std::size_t l = 0; l < to_physical.size(); ++l) {
    if (to_physical[l] != kUnmapped) m.assign(static_cast<int>(l), to_physical[l]);
  }
  return m;
}

void Mapping::assign(int logical, int physical) {
  if (physical < 0 || physical >= num_physical()) {
    throw std::out_of_range("physical qubit " + std::to_string(physical) + " out of range");
  }
  if (!is_free(physical) && this->logical(physical) != logical) {
    throw std::invalid_argument(
        "physical qubit " + std::to_string(physical) + " already holds q" +
        std::to_string(this->logical(physical)));
  }
  unassign(logical);
  to_phys_[static_cast<std::size_t>(logical)] = physical;
  to_log_[static_cast<std::size_t>(physical)] = logical;
}

void Mapping::unassign(int logical) {
  int& p = to_phys_[static_cast<std::size_t>(logical)];
  if (p != kUnmapped) {
    to_log_[static_cast<std::size_t>(p)] = kUnmapped;
    p = kUnmapped;
  }
}

void Mapping::swap_physical(int a, int b) {
  int la = logical(a);
  int lb = logical(b);
  to_log_[static_cast<std::size_t>(a)] = lb;
  to_log_[static_cast<std::size_t>(b)] = la;
  if (la != kUnmapped) to_phys_[static_cast<std::size_t>(la)] = b;
  if (lb != kUnmapped) to_phys_[static_cast<std::size_t>(lb)] = a;
}

int Mapping::mapped_count() const {
  return static_cast<int>(
      std::count_if(to_phys_.begin(), to_phys_.end(), [](int p) { return p != kUnmapped; }));
}

std::string Mapping::check_consistency() const {
  for (std::size_t l = 0; l < to_phys_.size(); ++l) {
    int p = to_phys_[l];
    if (p == kUnmapped) continue;
    if (p < 0 || p >= num_physical()) return "q" + std::to_string(l) + " maps out of range";
    if (to_log_[static_cast<std::size_t>(p)] != static_cast<int>(l)) {
      return "q" + std::to_string(l) + " and its inverse disagree";
    }
  }
  for (std::size_t p = 0; p < to_log_.size(); ++p) {
    int l = to_log_[p];
    if (l == kUnmapped) continue;
    if (l < 0 || l >= num_logical() || to_phys_[static_cast<std::size_t>(l)] != static_cast<int>(p)) {
      return "physical " + std::to_string(p) + " and its inverse disagree";
    }
  }
  return {};
}

std::string Mapping::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t l = 0; l < to_phys_.size(); ++l) {
    if (l) out << ", ";
    out << "q" << l << "->";
    if (to_phys_[l] == kUnmapped) {
      out << "-1";
    } else {
      out << "Q" << to_phys_[l];
    }
  }
  out << "}";
  return out.str();
}

}  // namespace tsmap
