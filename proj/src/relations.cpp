#include "dsmatch/relations.hpp"

#include <algorithm>

namespace dsmatch {

namespace {

// price descending, ties by ascending id
bool order_desc(const Order& a, const Order& b) {
    if (a.price != b.price) return a.price > b.price;
    return a.id < b.id;
}

// price ascending, ties by ascending id
bool order_asc(const Order& a, const Order& b) {
    if (a.price != b.price) return a.price < b.price;
    return a.id < b.id;
}

}  // namespace

std::vector<Order> sort_bids_desc(std::vector<Order> bids) {
    std::stable_sort(bids.begin(), bids.end(), order_desc);
    return bids;
}

std::vector<Order> sort_asks_asc(std::vector<Order> asks) {
    std::stable_sort(asks.begin(), asks.end(), order_asc);
    return asks;
}

std::vector<Order> sort_asks_desc(std::vector<Order> asks) {
    std::stable_sort(asks.begin(), asks.end(), order_desc);
    return asks;
}

Matching sort_fills_by_bid_desc(Matching fills) {
    std::stable_sort(fills.begin(), fills.end(),
                     [](const Fill& a, const Fill& b) { return order_desc(a.bid, b.bid); });
    return fills;
}

Matching sort_fills_by_ask_asc(Matching fills) {
    std::stable_sort(fills.begin(), fills.end(),
                     [](const Fill& a, const Fill& b) { return order_asc(a.ask, b.ask); });
    return fills;
}

bool prices_nonincreasing(const std::vector<Order>& orders) {
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (orders[i - 1].price < orders[i].price) return false;
    }
    return true;
}

bool prices_nondecreasing(const std::vector<Order>& orders) {
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (orders[i - 1].price > orders[i].price) return false;
    }
    return true;
}

bool bid_prices_nonincreasing(const Matching& fills) {
    for (std::size_t i = 1; i < fills.size(); ++i) {
        if (fills[i - 1].bid.price < fills[i].bid.price) return false;
    }
    return true;
}

bool ask_prices_nondecreasing(const Matching& fills) {
    for (std::size_t i = 1; i < fills.size(); ++i) {
        if (fills[i - 1].ask.price > fills[i].ask.price) return false;
    }
    return true;
}

}  // namespace dsmatch
