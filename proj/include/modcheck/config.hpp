#pragma once

namespace modcheck {

// Hard bounds for exhaustive machinery. Element-level operations stay cheap
// up to kMaxModuleOrder; anything that walks a whole submodule lattice or
// endomorphism family has a much tighter ceiling.
inline constexpr int kMaxRingOrder = 4096;
inline constexpr int kMaxModuleOrder = 4096;
inline constexpr int kMaxLatticeOrder = 64;
inline constexpr long long kMaxEndoFamily = 65536;

}  // namespace modcheck
