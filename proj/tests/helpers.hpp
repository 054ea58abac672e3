#pragma once

// Shared generators for the randomized suites. Deterministic: every test
// seeds its own engine.

#include <algorithm>
#include <random>
#include <vector>

#include "dsmatch/dsmatch.hpp"

namespace testutil {

using namespace dsmatch;

inline Fill fill(const Order& bid, const Order& ask, Price tp) { return Fill{bid, ask, tp}; }

// Book with up to max_per_side orders per side, prices uniform in
// [0, max_price], ids 1..n per side.
inline OrderBook random_book(std::mt19937& rng, int max_per_side = 12, Price max_price = 50) {
    std::uniform_int_distribution<int> size_dist(0, max_per_side);
    std::uniform_int_distribution<Price> price_dist(0, max_price);
    std::vector<Order> bids;
    std::vector<Order> asks;
    const int n_bids = size_dist(rng);
    const int n_asks = size_dist(rng);
    for (int i = 0; i < n_bids; ++i) bids.push_back(make_bid(price_dist(rng), i + 1));
    for (int i = 0; i < n_asks; ++i) asks.push_back(make_ask(price_dist(rng), i + 1));
    return make_order_book(std::move(bids), std::move(asks));
}

// Random valid matching on the book: injective, matchable pairs; trade
// prices drawn from {bid price, midpoint, random} so IR may or may not hold.
inline Matching random_matching(const OrderBook& book, std::mt19937& rng) {
    std::vector<Order> bids = book.bids;
    std::vector<Order> asks = book.asks;
    std::shuffle(bids.begin(), bids.end(), rng);
    std::shuffle(asks.begin(), asks.end(), rng);
    std::bernoulli_distribution take(0.6);
    std::uniform_int_distribution<int> price_mode(0, 2);
    std::uniform_int_distribution<Price> any_price(0, 60);
    Matching m;
    for (const Order& b : bids) {
        if (!take(rng)) continue;
        auto it = std::find_if(asks.begin(), asks.end(),
                               [&](const Order& a) { return a.price <= b.price; });
        if (it == asks.end()) continue;
        Price tp = 0;
        switch (price_mode(rng)) {
            case 0: tp = b.price; break;
            case 1: tp = it->price + (b.price - it->price) / 2; break;
            default: tp = any_price(rng); break;
        }
        m.push_back(Fill{b, *it, tp});
        asks.erase(it);
    }
    return m;
}

template <typename T>
inline std::vector<T> shuffled(std::vector<T> xs, std::mt19937& rng) {
    std::shuffle(xs.begin(), xs.end(), rng);
    return xs;
}

// Random integer list for the relation-law suites; a narrow value range
// makes collisions common.
inline std::vector<int> random_ints(std::mt19937& rng, int max_len = 10, int max_value = 5) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> value_dist(0, max_value);
    std::vector<int> xs(static_cast<std::size_t>(len_dist(rng)));
    for (int& x : xs) x = value_dist(rng);
    return xs;
}

// Random subsequence of xs (positive sublist cases).
template <typename T>
inline std::vector<T> random_subsequence(const std::vector<T>& xs, std::mt19937& rng) {
    std::bernoulli_distribution keep(0.5);
    std::vector<T> out;
    for (const T& x : xs) {
        if (keep(rng)) out.push_back(x);
    }
    return out;
}

}  // namespace testutil
