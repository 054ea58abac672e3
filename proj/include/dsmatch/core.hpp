#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsmatch {

// Prices are monetary ticks (lowest denomination), non-negative by
// convention; negative values are rejected at the parsing boundary.
using Price = std::int64_t;
using OrderId = std::int64_t;

enum class Side { Bid, Ask };

// Single-unit limit order. Equality is componentwise; inside a valid
// OrderBook this coincides with id equality because ids are unique per side.
struct Order {
    Side side{Side::Bid};
    Price price{0};
    OrderId id{0};

    friend bool operator==(const Order&, const Order&) = default;
};

// One matched bid-ask pair and the price it trades at. Fills carry no
// intrinsic constraints: checkers must be able to represent violating
// trades coming out of an exchange log.
struct Fill {
    Order bid;
    Order ask;
    Price trade_price{0};

    friend bool operator==(const Fill&, const Fill&) = default;
};

using Matching = std::vector<Fill>;

// Validated book sides. Construct through make_order_book, which enforces
// per-side id uniqueness and preserves input order.
struct OrderBook {
    std::vector<Order> bids;
    std::vector<Order> asks;
};

Order make_bid(Price price, OrderId id);
Order make_ask(Price price, OrderId id);

// Throws DuplicateIdError when an id repeats within a side. Reusing an id
// across sides is allowed.
OrderBook make_order_book(std::vector<Order> bids, std::vector<Order> asks);

// In-order projections of a matching.
std::vector<Order> bids_of(const Matching& m);
std::vector<Order> asks_of(const Matching& m);
std::vector<Price> prices_of(const std::vector<Order>& orders);
std::vector<Price> trade_prices_of(const Matching& m);

std::string to_string(Side side);
std::string to_string(const Order& order);
std::string to_string(const Fill& fill);

}  // namespace dsmatch
