#pragma once

#include "dsmatch/core.hpp"

namespace dsmatch {

// Greedy maximum matching over sorted sides. Both inputs must be sorted by
// price descending (PreconditionError otherwise). While the best remaining
// ask is affordable for the best remaining bid they are paired at the bid's
// limit price; an ask too expensive for the best bid can match nobody and is
// dropped. The result is a maximum matching on the two lists and is fair on
// bids (it never skips a bid from the top).
Matching maximum_matching(const std::vector<Order>& bids_desc,
                          const std::vector<Order>& asks_desc);

// Reprices every fill at the floor midpoint of [ask, bid], the canonical
// individually rational price. The bid-ask pair sequence is untouched.
// NotMatchableError when some fill has bid < ask (no IR price exists).
Matching make_individual_rational(const Matching& m);

// Fair and maximum matching for a whole book: sort sides, run
// maximum_matching, then one ask-side fairness pass (the greedy output is
// already fair on bids). Empty result on uncrossed books.
Matching fair_maximal_match(const OrderBook& book);

}  // namespace dsmatch
