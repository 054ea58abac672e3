#include "dsmatch/core.hpp"

#include <unordered_set>
#include <utility>

#include "dsmatch/errors.hpp"

namespace dsmatch {

Order make_bid(Price price, OrderId id) { return Order{Side::Bid, price, id}; }

Order make_ask(Price price, OrderId id) { return Order{Side::Ask, price, id}; }

namespace {

void require_unique_ids(const std::vector<Order>& orders, Side side) {
    std::unordered_set<OrderId> seen;
    seen.reserve(orders.size());
    for (const Order& o : orders) {
        if (!seen.insert(o.id).second) throw DuplicateIdError(side, o.id);
    }
}

}  // namespace

OrderBook make_order_book(std::vector<Order> bids, std::vector<Order> asks) {
    require_unique_ids(bids, Side::Bid);
    require_unique_ids(asks, Side::Ask);
    return OrderBook{std::move(bids), std::move(asks)};
}

std::vector<Order> bids_of(const Matching& m) {
    std::vector<Order> out;
    out.reserve(m.size());
    for (const Fill& f : m) out.push_back(f.bid);
    return out;
}

std::vector<Order> asks_of(const Matching& m) {
    std::vector<Order> out;
    out.reserve(m.size());
    for (const Fill& f : m) out.push_back(f.ask);
    return out;
}

std::vector<Price> prices_of(const std::vector<Order>& orders) {
    std::vector<Price> out;
    out.reserve(orders.size());
    for (const Order& o : orders) out.push_back(o.price);
    return out;
}

std::vector<Price> trade_prices_of(const Matching& m) {
    std::vector<Price> out;
    out.reserve(m.size());
    for (const Fill& f : m) out.push_back(f.trade_price);
    return out;
}

std::string to_string(Side side) { return side == Side::Bid ? "B" : "A"; }

std::string to_string(const Order& order) {
    return to_string(order.side) + "#" + std::to_string(order.id) + "@" +
           std::to_string(order.price);
}

std::string to_string(const Fill& fill) {
    return "(" + to_string(fill.bid) + ", " + to_string(fill.ask) +
           ", tp=" + std::to_string(fill.trade_price) + ")";
}

}  // namespace dsmatch
