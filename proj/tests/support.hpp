#pragma once

#include "oracle.hpp"

#include "ordalg/monoid.hpp"

#include <string>
#include <vector>

namespace testing {

/// Library rendering without the backend prefix, matching oracle labels.
inline std::string bare(const ordalg::Monoid &m, const ordalg::Element &e) {
  auto s = m.render(e);
  auto colon = s.find(':');
  return colon == std::string::npos ? s : s.substr(colon + 1);
}

inline std::string bare(const ordalg::Monoid &m, ordalg::ElemId id) {
  return bare(m, m.element(id));
}

inline std::vector<std::string> bare_all(const ordalg::Monoid &m,
                                         const std::vector<ordalg::Element> &es) {
  std::vector<std::string> out;
  for (const auto &e : es) out.push_back(bare(m, e));
  return out;
}

/// Oracle index of every library element (-1 if missing).
inline std::vector<int> index_map(const ordalg::Monoid &m, const oracle::Model &o) {
  std::vector<int> out;
  for (ordalg::ElemId i = 0; i < m.size(); ++i) out.push_back(o.find(bare(m, i)));
  return out;
}

} // namespace testing
