#include "dsmatch/max_matching.hpp"

#include "dsmatch/checkers.hpp"
#include "dsmatch/errors.hpp"
#include "dsmatch/fairness.hpp"
#include "dsmatch/relations.hpp"

namespace dsmatch {

Matching maximum_matching(const std::vector<Order>& bids_desc,
                          const std::vector<Order>& asks_desc) {
    if (!prices_nonincreasing(bids_desc)) {
        throw PreconditionError("bids are not sorted by price descending");
    }
    if (!prices_nonincreasing(asks_desc)) {
        throw PreconditionError("asks are not sorted by price descending");
    }
    Matching out;
    std::size_t bid = 0;
    std::size_t ask = 0;
    while (bid < bids_desc.size() && ask < asks_desc.size()) {
        if (asks_desc[ask].price <= bids_desc[bid].price) {
            out.push_back(Fill{bids_desc[bid], asks_desc[ask], bids_desc[bid].price});
            ++bid;
            ++ask;
        } else {
            // This ask is above even the best remaining bid: nobody can take it.
            ++ask;
        }
    }
    return out;
}

Matching make_individual_rational(const Matching& m) {
    Verdict matchable = all_matchable(m);
    if (!matchable.passed) throw NotMatchableError(*matchable.witness);
    Matching out = m;
    for (Fill& f : out) {
        f.trade_price = f.ask.price + (f.bid.price - f.ask.price) / 2;
    }
    return out;
}

Matching fair_maximal_match(const OrderBook& book) {
    Matching mm = maximum_matching(sort_bids_desc(book.bids), sort_asks_desc(book.asks));
    // The greedy pass is already fair on bids; one ask-side pass finishes.
    return make_fair_on_asks(sort_fills_by_ask_asc(std::move(mm)), sort_asks_asc(book.asks));
}

}  // namespace dsmatch
