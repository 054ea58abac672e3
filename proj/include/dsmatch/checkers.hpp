#pragma once

#include <optional>
#include <string>

#include "dsmatch/core.hpp"

namespace dsmatch {

// Outcome of one property check. Witnesses are deterministic: fills are
// scanned in matching order, book orders in canonical sorted order, and the
// first offender wins.
struct Verdict {
    std::string property;
    bool passed{true};
    std::optional<std::string> witness;  // present iff !passed
};

std::string format_verdict(const Verdict& v);

// Every fill has bid price >= ask price.
Verdict all_matchable(const Matching& m);

// The five-conjunct matching definition: all fills matchable, bid and ask
// projections duplicate-free, both projections drawn from the book.
Verdict is_matching_in(const OrderBook& book, const Matching& m);

// Every trade price lies in [ask limit, bid limit].
Verdict is_individual_rational(const Matching& m);

// All trade prices equal (vacuously true for |m| <= 1).
Verdict is_uniform(const Matching& m);

// No strictly more competitive order on the same side is left unmatched
// while a less competitive one trades.
Verdict is_fair_on_bids(const OrderBook& book, const Matching& m);
Verdict is_fair_on_asks(const OrderBook& book, const Matching& m);
Verdict is_fair(const OrderBook& book, const Matching& m);

// Valid matching whose size equals the independent augmenting-path maximum.
Verdict is_maximum(const OrderBook& book, const Matching& m);

// Valid, individually rational, uniform matching whose size equals the
// price-sweep maximum over uniform matchings.
Verdict is_uniform_maximal(const OrderBook& book, const Matching& m);

}  // namespace dsmatch
