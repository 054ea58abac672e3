#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace dsmatch;

TEST_CASE("make_fair_on_bids replaces bids from the top of the book") {
    const Order a1 = make_ask(70, 1);
    const Order a2 = make_ask(75, 2);
    const std::vector<Order> bids = {make_bid(100, 1), make_bid(90, 2), make_bid(80, 3)};

    SUBCASE("empty matching") { CHECK(make_fair_on_bids({}, bids).empty()); }

    SUBCASE("bids promoted, asks and trade prices kept") {
        const Matching m = {Fill{make_bid(90, 2), a1, 81}, Fill{make_bid(80, 3), a2, 77}};
        const Matching expected = {Fill{make_bid(100, 1), a1, 81},
                                   Fill{make_bid(90, 2), a2, 77}};
        const Matching out = make_fair_on_bids(m, bids);
        CHECK(out == expected);

        const OrderBook book = make_order_book(bids, {a1, a2});
        CHECK(is_fair_on_bids(book, out).passed);
        CHECK(asks_of(out) == asks_of(m));
        CHECK(trade_prices_of(out) == trade_prices_of(m));
    }

    SUBCASE("fixed point when the matched bids are already the top prefix") {
        const Matching m = {Fill{make_bid(100, 1), a1, 81}, Fill{make_bid(90, 2), a2, 77}};
        CHECK(make_fair_on_bids(m, bids) == m);
    }

    SUBCASE("output bids are the top prefix of the book") {
        const Matching m = {Fill{make_bid(90, 2), a1, 81}};
        const Matching out = make_fair_on_bids(m, bids);
        CHECK(bids_of(out) == std::vector<Order>{bids[0]});
    }
}

TEST_CASE("make_fair_on_bids preconditions are checked eagerly") {
    const Order a1 = make_ask(70, 1);
    const std::vector<Order> sorted_bids = {make_bid(100, 1), make_bid(90, 2)};

    // matching not sorted by bid price descending
    const Matching unsorted = {Fill{make_bid(90, 2), a1, 80}, Fill{make_bid(100, 1), a1, 80}};
    CHECK_THROWS_AS(make_fair_on_bids(unsorted, sorted_bids), PreconditionError);

    // bids not sorted descending
    const Matching m = {Fill{make_bid(90, 2), a1, 80}};
    CHECK_THROWS_AS(make_fair_on_bids(m, {make_bid(90, 2), make_bid(100, 1)}),
                    PreconditionError);

    // matched bid prices not a subsequence of the book's bid prices
    const Matching foreign = {Fill{make_bid(95, 9), a1, 80}};
    CHECK_THROWS_AS(make_fair_on_bids(foreign, sorted_bids), PreconditionError);
}

TEST_CASE("make_fair_on_asks replaces asks from the cheap end") {
    const Order b1 = make_bid(120, 1);
    const Order b2 = make_bid(110, 2);
    const std::vector<Order> asks = {make_ask(70, 4), make_ask(85, 5), make_ask(100, 6)};

    SUBCASE("empty matching") { CHECK(make_fair_on_asks({}, asks).empty()); }

    SUBCASE("asks promoted, bids and trade prices kept") {
        const Matching m = {Fill{b1, make_ask(85, 5), 111}, Fill{b2, make_ask(100, 6), 108}};
        const Matching expected = {Fill{b1, make_ask(70, 4), 111},
                                   Fill{b2, make_ask(85, 5), 108}};
        const Matching out = make_fair_on_asks(m, asks);
        CHECK(out == expected);

        const OrderBook book = make_order_book({b1, b2}, asks);
        CHECK(is_fair_on_asks(book, out).passed);
        CHECK(bids_of(out) == bids_of(m));
        CHECK(trade_prices_of(out) == trade_prices_of(m));
    }

    SUBCASE("fixed point when the matched asks are already the cheapest prefix") {
        const Matching m = {Fill{b1, make_ask(70, 4), 111}, Fill{b2, make_ask(85, 5), 108}};
        CHECK(make_fair_on_asks(m, asks) == m);
    }

    SUBCASE("preconditions") {
        const Matching unsorted = {Fill{b1, make_ask(85, 5), 111},
                                   Fill{b2, make_ask(70, 4), 108}};
        CHECK_THROWS_AS(make_fair_on_asks(unsorted, asks), PreconditionError);
        CHECK_THROWS_AS(make_fair_on_asks({Fill{b1, make_ask(85, 5), 111}},
                                          {make_ask(85, 5), make_ask(70, 4)}),
                        PreconditionError);
    }
}

TEST_CASE("fairify examples") {
    SUBCASE("empty matching on any book") {
        const OrderBook book = make_order_book({make_bid(10, 1)}, {make_ask(5, 1)});
        CHECK(fairify(book, {}).empty());
    }

    SUBCASE("single fill moves to the best bid and best ask") {
        const OrderBook book = make_order_book(
            {make_bid(100, 1), make_bid(90, 2), make_bid(80, 3)},
            {make_ask(70, 1), make_ask(85, 2)});
        const Matching m = {Fill{make_bid(90, 2), make_ask(85, 2), 88}};
        const Matching out = fairify(book, m);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Fill{make_bid(100, 1), make_ask(70, 1), 88});
        CHECK(is_fair(book, out).passed);
        CHECK(is_matching_in(book, out).passed);
    }

    SUBCASE("fully matched book is already fair") {
        const OrderBook book =
            make_order_book({make_bid(100, 1), make_bid(90, 2)},
                            {make_ask(80, 1), make_ask(85, 2)});
        const Matching m = {Fill{make_bid(100, 1), make_ask(85, 2), 95},
                            Fill{make_bid(90, 2), make_ask(80, 1), 85}};
        const Matching out = fairify(book, m);
        CHECK(out.size() == 2);
        CHECK(is_fair(book, out).passed);
        CHECK(perm(bids_of(out), bids_of(m)));
        CHECK(perm(asks_of(out), asks_of(m)));
    }

    SUBCASE("rejects fill sequences that are not a matching on the book") {
        const OrderBook book = make_order_book({make_bid(100, 1)}, {make_ask(90, 1)});
        const Matching not_in_book = {Fill{make_bid(55, 9), make_ask(50, 9), 52}};
        CHECK_THROWS_AS(fairify(book, not_in_book), NotAMatchingError);
    }
}

TEST_CASE("fairify preserves size and establishes fairness on random books") {
    std::mt19937 rng(41);
    int nonempty = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const OrderBook book = testutil::random_book(rng, 8);
        const Matching m = testutil::random_matching(book, rng);
        REQUIRE(is_matching_in(book, m).passed);

        const Matching out = fairify(book, m);
        CHECK(out.size() == m.size());
        CHECK(is_matching_in(book, out).passed);
        CHECK(is_fair(book, out).passed);
        CHECK(perm(trade_prices_of(out), trade_prices_of(m)));
        if (!out.empty()) ++nonempty;
    }
    CHECK(nonempty > 50);  // the generator must exercise non-trivial cases
}
