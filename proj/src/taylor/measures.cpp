// SPDX-License-Identifier: Apache-2.0
#include "components/components.hpp"
#include "taylor/taylor.hpp"

namespace pnet {

std::uint64_t basis(const Net& r) {
  std::uint64_t m = std::max<std::uint64_t>(
      {box_count(r), cosize(r), nb_invisible(r), 1});
  return m + 1;
}

UnitTermMeasures measures_from_one_term(const Net& term) {
  UnitTermMeasures m;
  m.cosize = cosize(term);
  for (auto& [p, l] : term.ground.labels)
    if (l == Label::Bang && !term.is_box(p)) ++m.n_boxes;
  m.n_invisible = nb_invisible(term);
  return m;
}

}  // namespace pnet
