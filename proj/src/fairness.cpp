#include "dsmatch/fairness.hpp"

#include "dsmatch/checkers.hpp"
#include "dsmatch/errors.hpp"
#include "dsmatch/relations.hpp"

namespace dsmatch {

Matching make_fair_on_bids(const Matching& m, const std::vector<Order>& bids) {
    if (!bid_prices_nonincreasing(m)) {
        throw PreconditionError("matching is not sorted by bid price descending");
    }
    if (!prices_nonincreasing(bids)) {
        throw PreconditionError("bids are not sorted by price descending");
    }
    if (!sublist(prices_of(bids_of(m)), prices_of(bids))) {
        throw PreconditionError("matched bid prices are not a subsequence of the bid prices");
    }
    // The subsequence precondition guarantees |m| <= |bids|.
    Matching out;
    out.reserve(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        out.push_back(Fill{bids[k], m[k].ask, m[k].trade_price});
    }
    return out;
}

Matching make_fair_on_asks(const Matching& m, const std::vector<Order>& asks) {
    if (!ask_prices_nondecreasing(m)) {
        throw PreconditionError("matching is not sorted by ask price ascending");
    }
    if (!prices_nondecreasing(asks)) {
        throw PreconditionError("asks are not sorted by price ascending");
    }
    if (!sublist(prices_of(asks_of(m)), prices_of(asks))) {
        throw PreconditionError("matched ask prices are not a subsequence of the ask prices");
    }
    Matching out;
    out.reserve(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        out.push_back(Fill{m[k].bid, asks[k], m[k].trade_price});
    }
    return out;
}

Matching fairify(const OrderBook& book, const Matching& m) {
    Verdict valid = is_matching_in(book, m);
    if (!valid.passed) throw NotAMatchingError(*valid.witness);
    Matching fair_bids =
        make_fair_on_bids(sort_fills_by_bid_desc(m), sort_bids_desc(book.bids));
    return make_fair_on_asks(sort_fills_by_ask_asc(std::move(fair_bids)),
                             sort_asks_asc(book.asks));
}

}  // namespace dsmatch
