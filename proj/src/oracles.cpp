#include "dsmatch/oracles.hpp"

#include <algorithm>
#include <functional>

#include "dsmatch/errors.hpp"

namespace dsmatch::oracle {

namespace {

// One augmenting-path search (Kuhn). `ask_mate[j]` is the bid currently
// matched to ask j, or -1.
bool augment(std::size_t bid, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<int>& ask_mate, std::vector<bool>& visited) {
    for (std::size_t ask : adj[bid]) {
        if (visited[ask]) continue;
        visited[ask] = true;
        if (ask_mate[ask] < 0 ||
            augment(static_cast<std::size_t>(ask_mate[ask]), adj, ask_mate, visited)) {
            ask_mate[ask] = static_cast<int>(bid);
            return true;
        }
    }
    return false;
}

}  // namespace

std::size_t max_matching_size(const std::vector<Order>& bids, const std::vector<Order>& asks) {
    std::vector<std::vector<std::size_t>> adj(bids.size());
    for (std::size_t i = 0; i < bids.size(); ++i) {
        for (std::size_t j = 0; j < asks.size(); ++j) {
            if (bids[i].price >= asks[j].price) adj[i].push_back(j);
        }
    }
    std::vector<int> ask_mate(asks.size(), -1);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < bids.size(); ++i) {
        std::vector<bool> visited(asks.size(), false);
        if (augment(i, adj, ask_mate, visited)) ++matched;
    }
    return matched;
}

std::size_t max_matching_size(const OrderBook& book) {
    return max_matching_size(book.bids, book.asks);
}

std::size_t max_uniform_size(const std::vector<Order>& bids, const std::vector<Order>& asks) {
    // Any maximizing clearing price can be shifted to a limit price without
    // losing pairs, so sweeping the book's own prices is complete.
    std::vector<Price> candidates;
    candidates.reserve(bids.size() + asks.size());
    for (const Order& b : bids) candidates.push_back(b.price);
    for (const Order& a : asks) candidates.push_back(a.price);

    std::size_t best = 0;
    for (Price p : candidates) {
        std::size_t bids_at_or_above = 0;
        for (const Order& b : bids) {
            if (b.price >= p) ++bids_at_or_above;
        }
        std::size_t asks_at_or_below = 0;
        for (const Order& a : asks) {
            if (a.price <= p) ++asks_at_or_below;
        }
        best = std::max(best, std::min(bids_at_or_above, asks_at_or_below));
    }
    return best;
}

std::size_t max_uniform_size(const OrderBook& book) {
    return max_uniform_size(book.bids, book.asks);
}

std::vector<Matching> enumerate_matchings(const OrderBook& book, std::size_t per_side_limit) {
    if (book.bids.size() > per_side_limit || book.asks.size() > per_side_limit) {
        throw TooLargeError("book exceeds enumeration bound of " +
                            std::to_string(per_side_limit) + " orders per side");
    }

    std::vector<Matching> out;
    Matching current;
    std::vector<bool> ask_used(book.asks.size(), false);

    // Each matching corresponds to exactly one partial injective assignment
    // of asks to bids, so walking bids in book order emits no duplicates.
    std::function<void(std::size_t)> walk = [&](std::size_t bid_index) {
        if (bid_index == book.bids.size()) {
            out.push_back(current);
            return;
        }
        walk(bid_index + 1);  // leave this bid unmatched
        const Order& bid = book.bids[bid_index];
        for (std::size_t j = 0; j < book.asks.size(); ++j) {
            if (ask_used[j] || book.asks[j].price > bid.price) continue;
            ask_used[j] = true;
            current.push_back(Fill{bid, book.asks[j], bid.price});
            walk(bid_index + 1);
            current.pop_back();
            ask_used[j] = false;
        }
    };
    walk(0);
    return out;
}

}  // namespace dsmatch::oracle
