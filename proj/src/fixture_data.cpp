#include "fixture_data.hpp"

namespace quatlat::detail {

// T(1), ..., T(14) for the (-1,-3) order Z + 2iZ + 2jZ + 2kZ, reference class order.
const std::array<std::array<std::array<int, 8>, 8>, 14> kReferenceBrandt = {{
    {{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}}},
    {{{0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {1, 0, 1, 2, 0, 0, 0, 0}, {0, 1, 2, 1, 0, 0, 0, 0}, {2, 1, 0, 1, 0, 0, 0, 0}, {1, 2, 1, 0, 0, 0, 0, 0}}},
    {{{0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}}},
    {{{2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {0, 2, 0, 2, 2, 2, 2, 2}, {2, 0, 2, 0, 2, 2, 2, 2}, {2, 0, 2, 0, 2, 2, 2, 2}, {0, 2, 0, 2, 2, 2, 2, 2}}},
    {{{2, 4, 0, 0, 0, 0, 0, 0}, {4, 2, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 4, 0, 0, 0, 0}, {0, 0, 4, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 4, 0, 0}, {0, 0, 0, 0, 4, 2, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 4}, {0, 0, 0, 0, 0, 0, 4, 2}}},
    {{{0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 2, 2, 2, 2}, {2, 1, 0, 1, 0, 0, 0, 0}, {1, 2, 1, 0, 0, 0, 0, 0}, {1, 0, 1, 2, 0, 0, 0, 0}, {0, 1, 2, 1, 0, 0, 0, 0}}},
    {{{0, 0, 4, 4, 0, 0, 0, 0}, {0, 0, 4, 4, 0, 0, 0, 0}, {4, 4, 0, 0, 0, 0, 0, 0}, {4, 4, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 4, 4}, {0, 0, 0, 0, 0, 0, 4, 4}, {0, 0, 0, 0, 4, 4, 0, 0}, {0, 0, 0, 0, 4, 4, 0, 0}}},
    {{{2, 2, 2, 2, 10, 10, 10, 10}, {2, 2, 2, 2, 10, 10, 10, 10}, {2, 2, 2, 2, 10, 10, 10, 10}, {2, 2, 2, 2, 10, 10, 10, 10}, {6, 6, 6, 6, 2, 2, 2, 2}, {6, 6, 6, 6, 2, 2, 2, 2}, {6, 6, 6, 6, 2, 2, 2, 2}, {6, 6, 6, 6, 2, 2, 2, 2}}},
    {{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}}},
    {{{0, 0, 0, 0, 12, 12, 12, 12}, {0, 0, 0, 0, 12, 12, 12, 12}, {0, 0, 0, 0, 12, 12, 12, 12}, {0, 0, 0, 0, 12, 12, 12, 12}, {2, 4, 10, 8, 0, 0, 0, 0}, {4, 2, 8, 10, 0, 0, 0, 0}, {8, 10, 4, 2, 0, 0, 0, 0}, {10, 8, 2, 4, 0, 0, 0, 0}}},
    {{{0, 0, 8, 4, 0, 0, 0, 0}, {0, 0, 4, 8, 0, 0, 0, 0}, {8, 4, 0, 0, 0, 0, 0, 0}, {4, 8, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 4, 8}, {0, 0, 0, 0, 0, 0, 8, 4}, {0, 0, 0, 0, 4, 8, 0, 0}, {0, 0, 0, 0, 8, 4, 0, 0}}},
    {{{2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 0, 2, 0, 2, 2, 2, 2}, {0, 2, 0, 2, 2, 2, 2, 2}, {0, 2, 0, 2, 2, 2, 2, 2}, {2, 0, 2, 0, 2, 2, 2, 2}}},
    {{{6, 8, 0, 0, 0, 0, 0, 0}, {8, 6, 0, 0, 0, 0, 0, 0}, {0, 0, 6, 8, 0, 0, 0, 0}, {0, 0, 8, 6, 0, 0, 0, 0}, {0, 0, 0, 0, 6, 8, 0, 0}, {0, 0, 0, 0, 8, 6, 0, 0}, {0, 0, 0, 0, 0, 0, 6, 8}, {0, 0, 0, 0, 0, 0, 8, 6}}},
    {{{0, 0, 0, 0, 16, 16, 16, 16}, {0, 0, 0, 0, 16, 16, 16, 16}, {0, 0, 0, 0, 16, 16, 16, 16}, {0, 0, 0, 0, 16, 16, 16, 16}, {12, 12, 4, 4, 0, 0, 0, 0}, {12, 12, 4, 4, 0, 0, 0, 0}, {4, 4, 12, 12, 0, 0, 0, 0}, {4, 4, 12, 12, 0, 0, 0, 0}}},
}};

// Coefficients of q^0, ..., q^15 of each theta series, row-major over (i, j).
const std::array<std::array<const char*, 16>, 64> kReferenceTheta = {{
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "2", "0", "2", "0", "2", "0", "10", "0", "12", "0", "2", "0", "16", "0"},
    {"1/2", "0", "1", "0", "0", "0", "2", "0", "6", "0", "2", "0", "2", "0", "12", "0"},
    {"1/2", "0", "0", "0", "2", "0", "1", "0", "6", "0", "4", "0", "0", "0", "12", "0"},
    {"1/2", "0", "2", "0", "2", "0", "1", "0", "6", "0", "8", "0", "0", "0", "4", "0"},
    {"1/2", "0", "1", "0", "0", "0", "0", "0", "6", "0", "10", "0", "2", "0", "4", "0"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "0", "0", "2", "0", "1", "0", "6", "0", "4", "0", "0", "0", "12", "0"},
    {"1/2", "0", "1", "0", "0", "0", "2", "0", "6", "0", "2", "0", "2", "0", "12", "0"},
    {"1/2", "0", "1", "0", "0", "0", "0", "0", "6", "0", "10", "0", "2", "0", "4", "0"},
    {"1/2", "0", "2", "0", "2", "0", "1", "0", "6", "0", "8", "0", "0", "0", "4", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "2", "0", "2", "0", "1", "0", "6", "0", "8", "0", "0", "0", "4", "0"},
    {"1/2", "0", "1", "0", "0", "0", "0", "0", "6", "0", "10", "0", "2", "0", "4", "0"},
    {"1/2", "0", "1", "0", "0", "0", "2", "0", "6", "0", "2", "0", "2", "0", "12", "0"},
    {"1/2", "0", "0", "0", "2", "0", "1", "0", "6", "0", "4", "0", "0", "0", "12", "0"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "0", "1", "0", "0", "0", "0", "0", "6", "0", "10", "0", "2", "0", "4", "0"},
    {"1/2", "0", "2", "0", "2", "0", "1", "0", "6", "0", "8", "0", "0", "0", "4", "0"},
    {"1/2", "0", "0", "0", "2", "0", "1", "0", "6", "0", "4", "0", "0", "0", "12", "0"},
    {"1/2", "0", "1", "0", "0", "0", "2", "0", "6", "0", "2", "0", "2", "0", "12", "0"},
    {"1/2", "0", "0", "0", "2", "0", "0", "4", "2", "0", "0", "8", "2", "0", "0", "4"},
    {"1/2", "0", "0", "1", "2", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2"},
    {"1/2", "0", "0", "0", "2", "4", "0", "0", "2", "0", "0", "0", "2", "8", "0", "0"},
    {"1/2", "1", "0", "0", "2", "2", "0", "0", "2", "1", "0", "0", "2", "6", "0", "0"},
}};

// computed class index for each reference index
const std::array<std::size_t, 8> kBrandtPermutation = {0, 2, 3, 1, 5, 7, 4, 6};
const std::array<std::size_t, 8> kThetaPermutation = {0, 2, 1, 3, 5, 7, 4, 6};

}  // namespace quatlat::detail
