#include "dsmatch/uniform.hpp"

#include <algorithm>

#include "dsmatch/errors.hpp"
#include "dsmatch/relations.hpp"

namespace dsmatch {

Matching uncross(const std::vector<Order>& bids_desc, const std::vector<Order>& asks_asc) {
    if (!prices_nonincreasing(bids_desc)) {
        throw PreconditionError("bids are not sorted by price descending");
    }
    if (!prices_nondecreasing(asks_asc)) {
        throw PreconditionError("asks are not sorted by price ascending");
    }
    Matching out;
    const std::size_t depth = std::min(bids_desc.size(), asks_asc.size());
    for (std::size_t k = 0; k < depth; ++k) {
        if (asks_asc[k].price > bids_desc[k].price) break;
        out.push_back(Fill{bids_desc[k], asks_asc[k], bids_desc[k].price});
    }
    return out;
}

std::optional<Price> uniform_price(const std::vector<Order>& bids_desc,
                                   const std::vector<Order>& asks_asc) {
    Matching pairs = uncross(bids_desc, asks_asc);
    if (pairs.empty()) return std::nullopt;
    return pairs.back().bid.price;
}

UniformResult uniform_matching(const OrderBook& book) {
    Matching pairs = uncross(sort_bids_desc(book.bids), sort_asks_asc(book.asks));
    if (pairs.empty()) return UniformResult{{}, std::nullopt};
    const Price clearing = pairs.back().bid.price;
    for (Fill& f : pairs) f.trade_price = clearing;
    return UniformResult{std::move(pairs), clearing};
}

}  // namespace dsmatch
