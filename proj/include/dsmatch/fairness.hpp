#pragma once

#include "dsmatch/core.hpp"

namespace dsmatch {

// Size-preserving fairness transforms. Both substitution passes keep each
// fill's trade price and the untouched side of the pair; only the named side
// is replaced by the top of the book.

// Preconditions (checked eagerly, PreconditionError on violation):
//   - m sorted by bid price descending, bids sorted descending,
//   - the matched bid prices form a subsequence of the book bid prices.
// The k-th output fill keeps the k-th input fill's ask and trade price and
// takes the k-th bid of `bids`, so the output bid list is the top-|m| prefix
// of `bids` and the result is fair on bids.
Matching make_fair_on_bids(const Matching& m, const std::vector<Order>& bids);

// Mirror of make_fair_on_bids: m sorted by ask price ascending, asks sorted
// ascending, matched ask prices a subsequence of the book ask prices. Keeps
// bids and trade prices, substitutes the k-th (cheapest available) ask.
Matching make_fair_on_asks(const Matching& m, const std::vector<Order>& asks);

// Full pipeline: sort fills by bid desc, substitute bids from the sorted
// book, re-sort by ask asc, substitute asks. Requires m to be a matching on
// the book (NotAMatchingError otherwise); the result is a fair matching of
// identical size. Trade prices ride along unchanged; compose with
// make_individual_rational when IR is needed afterwards.
Matching fairify(const OrderBook& book, const Matching& m);

}  // namespace dsmatch
