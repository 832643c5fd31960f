#pragma once

#include <array>
#include <cstddef>

namespace quatlat::detail {

extern const std::array<std::array<std::array<int, 8>, 8>, 14> kReferenceBrandt;
extern const std::array<std::array<const char*, 16>, 64> kReferenceTheta;
extern const std::array<std::size_t, 8> kBrandtPermutation;
extern const std::array<std::size_t, 8> kThetaPermutation;

}  // namespace quatlat::detail
