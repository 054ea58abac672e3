#pragma once

#include <optional>

#include "dsmatch/core.hpp"

namespace dsmatch {

// Result of the uniform-price opening auction. The price is absent exactly
// when nothing trades; when present every fill trades at it.
struct UniformResult {
    Matching matching;
    std::optional<Price> price;
};

// Pairs the best remaining bid with the cheapest remaining ask while the
// heads still cross, at the bid's limit price, and stops at the first
// unmatchable head pair. Requires bids sorted descending and asks sorted
// ascending (PreconditionError otherwise).
Matching uncross(const std::vector<Order>& bids_desc,
                 const std::vector<Order>& asks_asc);

// Equilibrium price discovered by the uncross: the bid limit price of the
// last paired fill. Absent when the pairing is empty.
std::optional<Price> uniform_price(const std::vector<Order>& bids_desc,
                                   const std::vector<Order>& asks_asc);

// Whole-book opening auction: sorts sides internally, uncrosses, and
// reprices every fill at the discovered uniform price. The result is an
// individually rational, uniform, fair matching of maximal size among all
// uniform matchings on the book.
UniformResult uniform_matching(const OrderBook& book);

}  // namespace dsmatch
