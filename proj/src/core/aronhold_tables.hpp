#pragma once

#include <array>

namespace netconics::detail {

/// coefficient * prod_k c[index[k]] over the cubic coefficient vector.
template <int Degree>
struct InvariantTerm {
  long coefficient;
  std::array<int, Degree> index;
};

extern const std::array<InvariantTerm<4>, 25> kAronholdS;
extern const std::array<InvariantTerm<6>, 103> kAronholdT;

}  // namespace netconics::detail
