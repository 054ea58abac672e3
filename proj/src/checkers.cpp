#include "dsmatch/checkers.hpp"

#include <cstddef>

#include "dsmatch/oracles.hpp"
#include "dsmatch/relations.hpp"

namespace dsmatch {

namespace {

Verdict pass(std::string property) { return Verdict{std::move(property), true, std::nullopt}; }

Verdict fail(std::string property, std::string witness) {
    return Verdict{std::move(property), false, std::move(witness)};
}

std::string fill_at(std::size_t index, const Fill& fill) {
    return "fill " + std::to_string(index) + " " + to_string(fill);
}

// Fairness on one side. `book_side` is scanned in canonical competitive
// order (most competitive first); a violation is an unmatched order followed
// by a matched, strictly less competitive one.
Verdict fair_on_side(std::string property, const std::vector<Order>& competitive_order,
                     const std::vector<Order>& matched, bool bids) {
    std::vector<bool> in_matching(competitive_order.size());
    for (std::size_t i = 0; i < competitive_order.size(); ++i) {
        in_matching[i] = count(competitive_order[i], matched) > 0;
    }
    for (std::size_t i = 0; i < competitive_order.size(); ++i) {
        if (in_matching[i]) continue;
        for (std::size_t j = i + 1; j < competitive_order.size(); ++j) {
            const bool strictly_worse = bids
                                            ? competitive_order[j].price < competitive_order[i].price
                                            : competitive_order[j].price > competitive_order[i].price;
            if (strictly_worse && in_matching[j]) {
                return fail(std::move(property),
                            "unmatched " + to_string(competitive_order[i]) +
                                " is more competitive than matched " +
                                to_string(competitive_order[j]));
            }
        }
        break;  // later unmatched orders cannot produce an earlier witness
    }
    return pass(std::move(property));
}

}  // namespace

std::string format_verdict(const Verdict& v) {
    std::string out = v.property + (v.passed ? " PASS" : " FAIL");
    if (v.witness) out += " " + *v.witness;
    return out;
}

Verdict all_matchable(const Matching& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].bid.price < m[i].ask.price) {
            return fail("matchable", fill_at(i, m[i]) + " has bid < ask");
        }
    }
    return pass("matchable");
}

Verdict is_matching_in(const OrderBook& book, const Matching& m) {
    const std::string property = "matching";
    Verdict matchable = all_matchable(m);
    if (!matchable.passed) return fail(property, *matchable.witness);

    const std::vector<Order> matched_bids = bids_of(m);
    const std::vector<Order> matched_asks = asks_of(m);
    for (const Order& b : matched_bids) {
        if (count(b, matched_bids) != 1) return fail(property, "duplicate bid " + to_string(b));
    }
    for (const Order& a : matched_asks) {
        if (count(a, matched_asks) != 1) return fail(property, "duplicate ask " + to_string(a));
    }
    for (const Order& b : matched_bids) {
        if (count(b, book.bids) == 0) return fail(property, "bid " + to_string(b) + " not in book");
    }
    for (const Order& a : matched_asks) {
        if (count(a, book.asks) == 0) return fail(property, "ask " + to_string(a) + " not in book");
    }
    return pass(property);
}

Verdict is_individual_rational(const Matching& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Fill& f = m[i];
        if (f.trade_price < f.ask.price || f.trade_price > f.bid.price) {
            return fail("ir", fill_at(i, f) + " trades outside [" + std::to_string(f.ask.price) +
                                  ", " + std::to_string(f.bid.price) + "]");
        }
    }
    return pass("ir");
}

Verdict is_uniform(const Matching& m) {
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i].trade_price != m[0].trade_price) {
            return fail("uniform", "fill 0 trades at " + std::to_string(m[0].trade_price) +
                                       " but fill " + std::to_string(i) + " at " +
                                       std::to_string(m[i].trade_price));
        }
    }
    return pass("uniform");
}

Verdict is_fair_on_bids(const OrderBook& book, const Matching& m) {
    return fair_on_side("fair-on-bids", sort_bids_desc(book.bids), bids_of(m), true);
}

Verdict is_fair_on_asks(const OrderBook& book, const Matching& m) {
    return fair_on_side("fair-on-asks", sort_asks_asc(book.asks), asks_of(m), false);
}

Verdict is_fair(const OrderBook& book, const Matching& m) {
    Verdict bids = is_fair_on_bids(book, m);
    if (!bids.passed) return fail("fair", *bids.witness);
    Verdict asks = is_fair_on_asks(book, m);
    if (!asks.passed) return fail("fair", *asks.witness);
    return pass("fair");
}

Verdict is_maximum(const OrderBook& book, const Matching& m) {
    const std::string property = "maximal";
    Verdict matching = is_matching_in(book, m);
    if (!matching.passed) return fail(property, "not a matching: " + *matching.witness);
    const std::size_t best = oracle::max_matching_size(book);
    if (m.size() != best) {
        return fail(property, "|M|=" + std::to_string(m.size()) +
                                  " but maximum is " + std::to_string(best));
    }
    return pass(property);
}

Verdict is_uniform_maximal(const OrderBook& book, const Matching& m) {
    const std::string property = "uniform-maximal";
    Verdict matching = is_matching_in(book, m);
    if (!matching.passed) return fail(property, "not a matching: " + *matching.witness);
    Verdict ir = is_individual_rational(m);
    if (!ir.passed) return fail(property, "not individually rational: " + *ir.witness);
    Verdict uniform = is_uniform(m);
    if (!uniform.passed) return fail(property, "not uniform: " + *uniform.witness);
    const std::size_t best = oracle::max_uniform_size(book);
    if (m.size() != best) {
        return fail(property, "|M|=" + std::to_string(m.size()) +
                                  " but uniform maximum is " + std::to_string(best));
    }
    return pass(property);
}

}  // namespace dsmatch
