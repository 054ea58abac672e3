#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dsmatch/core.hpp"

namespace dsmatch {

// Multiset and subsequence relations over plain sequences. These are the
// specification vocabulary used by the checkers, so they stay in their naive
// counting form: trustworthiness over speed.

template <typename T>
std::size_t count(const T& x, const std::vector<T>& xs) {
    return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), x));
}

// Multiset subset: every element occurs in `sup` at least as often as in `sub`.
template <typename T>
bool included(const std::vector<T>& sub, const std::vector<T>& sup) {
    for (const T& x : sub) {
        if (count(x, sub) > count(x, sup)) return false;
    }
    return true;
}

// Multiset equality.
template <typename T>
bool perm(const std::vector<T>& lhs, const std::vector<T>& rhs) {
    return included(lhs, rhs) && included(rhs, lhs);
}

// Not-necessarily-contiguous subsequence.
template <typename T>
bool sublist(const std::vector<T>& needle, const std::vector<T>& hay) {
    std::size_t matched = 0;
    for (const T& x : hay) {
        if (matched == needle.size()) break;
        if (needle[matched] == x) ++matched;
    }
    return matched == needle.size();
}

// Canonical sorts: stable by price in the stated direction, ties broken by
// ascending id so every downstream algorithm is deterministic.
std::vector<Order> sort_bids_desc(std::vector<Order> bids);
std::vector<Order> sort_asks_asc(std::vector<Order> asks);
std::vector<Order> sort_asks_desc(std::vector<Order> asks);
Matching sort_fills_by_bid_desc(Matching fills);
Matching sort_fills_by_ask_asc(Matching fills);

// Sortedness predicates used by operation preconditions (price order only).
bool prices_nonincreasing(const std::vector<Order>& orders);
bool prices_nondecreasing(const std::vector<Order>& orders);
bool bid_prices_nonincreasing(const Matching& fills);
bool ask_prices_nondecreasing(const Matching& fills);

}  // namespace dsmatch
