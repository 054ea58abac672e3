#pragma once

#include <cstddef>
#include <vector>

#include "dsmatch/core.hpp"

namespace dsmatch::oracle {

// Independent brute-force references. These share no code with the greedy
// matchers they are used to audit: maximality is recomputed with augmenting
// paths on the bipartite crossing graph, uniform maximality with a price
// sweep, and tiny books can be settled by exhaustive enumeration.

// Size of a maximum bipartite matching on the graph with an edge (b, a)
// whenever b.price >= a.price, by repeated augmenting-path search.
std::size_t max_matching_size(const std::vector<Order>& bids,
                              const std::vector<Order>& asks);
std::size_t max_matching_size(const OrderBook& book);

// Max over candidate prices p drawn from the book's limit prices of
// min(#bids with price >= p, #asks with price <= p): the largest volume any
// single clearing price can support.
std::size_t max_uniform_size(const std::vector<Order>& bids,
                             const std::vector<Order>& asks);
std::size_t max_uniform_size(const OrderBook& book);

// All matchings on the book, as fill lists with trade price set to the bid
// price, without duplicates (includes the empty matching). TooLargeError
// when either side exceeds per_side_limit.
std::vector<Matching> enumerate_matchings(const OrderBook& book,
                                          std::size_t per_side_limit = 8);

}  // namespace dsmatch::oracle
