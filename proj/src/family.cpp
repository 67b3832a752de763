/*
   Copyright 2026 The frobex authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "frobex/family.hpp"

#include <algorithm>

namespace frobex {

CentralPoly FrobeniusFamily::phi(const Element& h) const {
  const std::size_t target = phi_index();
  for (auto& [i, z] : coordinates(h))
    if (i == target) return z;
  return central_zero();
}

CentralCharacter FrobeniusFamily::augmentation() const {
  CentralCharacter chi;
  chi.label = "augmentation";
  const auto units = unit_variables();
  for (const auto& v : central_variables()) {
    const bool unit = std::find(units.begin(), units.end(), v) != units.end();
    chi.values[v] = unit ? Cyc(1) : Cyc(0);
  }
  return chi;
}

}  // namespace frobex
