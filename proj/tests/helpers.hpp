#pragma once

#include <utility>
#include <vector>

#include "pbm/block_space.hpp"

namespace testing_helpers {

inline pbm::Pomset example_pomset() {
    const std::vector<std::pair<int, int>> below{{1, 3}, {2, 4}, {2, 5}};
    return pbm::Pomset::make(5, 3, below);
}

inline pbm::BlockSpace chain_space(int m, std::vector<int> k) {
    const int n = static_cast<int>(k.size());
    return pbm::BlockSpace(m, pbm::Pomset::chain(n, m / 2), std::move(k));
}

inline pbm::BlockSpace antichain_space(int m, std::vector<int> k) {
    const int n = static_cast<int>(k.size());
    return pbm::BlockSpace(m, pbm::Pomset::antichain(n, m / 2), std::move(k));
}

}  // namespace testing_helpers
