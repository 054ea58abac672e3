#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "dsmatch/dsmatch.hpp"

namespace py = pybind11;

namespace {

dsmatch::OrderBook book_from_csv(const std::string& text) {
    std::istringstream in(text);
    return dsmatch::read_book(in);
}

std::vector<dsmatch::TradeRow> trades_from_csv(const std::string& text) {
    std::istringstream in(text);
    return dsmatch::read_trades(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Double-sided auction matching, price discovery and trade audit";

    py::register_exception<dsmatch::Error>(m, "MatchError");

    py::enum_<dsmatch::Side>(m, "Side")
        .value("Bid", dsmatch::Side::Bid)
        .value("Ask", dsmatch::Side::Ask);

    py::class_<dsmatch::Order>(m, "Order")
        .def(py::init<dsmatch::Side, dsmatch::Price, dsmatch::OrderId>(), py::arg("side"),
             py::arg("price"), py::arg("id"))
        .def_readwrite("side", &dsmatch::Order::side)
        .def_readwrite("price", &dsmatch::Order::price)
        .def_readwrite("id", &dsmatch::Order::id)
        .def("__eq__", [](const dsmatch::Order& a, const dsmatch::Order& b) { return a == b; })
        .def("__repr__", [](const dsmatch::Order& o) { return dsmatch::to_string(o); });

    py::class_<dsmatch::Fill>(m, "Fill")
        .def(py::init<dsmatch::Order, dsmatch::Order, dsmatch::Price>(), py::arg("bid"),
             py::arg("ask"), py::arg("trade_price"))
        .def_readwrite("bid", &dsmatch::Fill::bid)
        .def_readwrite("ask", &dsmatch::Fill::ask)
        .def_readwrite("trade_price", &dsmatch::Fill::trade_price)
        .def("__eq__", [](const dsmatch::Fill& a, const dsmatch::Fill& b) { return a == b; })
        .def("__repr__", [](const dsmatch::Fill& f) { return dsmatch::to_string(f); });

    py::class_<dsmatch::OrderBook>(m, "OrderBook")
        .def_readonly("bids", &dsmatch::OrderBook::bids)
        .def_readonly("asks", &dsmatch::OrderBook::asks);

    py::class_<dsmatch::Verdict>(m, "Verdict")
        .def_readonly("property", &dsmatch::Verdict::property)
        .def_readonly("passed", &dsmatch::Verdict::passed)
        .def_readonly("witness", &dsmatch::Verdict::witness)
        .def("__bool__", [](const dsmatch::Verdict& v) { return v.passed; })
        .def("__repr__", [](const dsmatch::Verdict& v) { return dsmatch::format_verdict(v); });

    py::class_<dsmatch::UniformResult>(m, "UniformResult")
        .def_readonly("matching", &dsmatch::UniformResult::matching)
        .def_readonly("price", &dsmatch::UniformResult::price);

    py::class_<dsmatch::TradeRow>(m, "TradeRow")
        .def(py::init<dsmatch::OrderId, dsmatch::OrderId, dsmatch::Price>(), py::arg("bid_id"),
             py::arg("ask_id"), py::arg("price"))
        .def_readwrite("bid_id", &dsmatch::TradeRow::bid_id)
        .def_readwrite("ask_id", &dsmatch::TradeRow::ask_id)
        .def_readwrite("price", &dsmatch::TradeRow::price);

    // construction and projections
    m.def("make_bid", &dsmatch::make_bid, py::arg("price"), py::arg("id"));
    m.def("make_ask", &dsmatch::make_ask, py::arg("price"), py::arg("id"));
    m.def("make_order_book", &dsmatch::make_order_book, py::arg("bids"), py::arg("asks"));
    m.def("bids_of", &dsmatch::bids_of);
    m.def("asks_of", &dsmatch::asks_of);
    m.def("prices_of", &dsmatch::prices_of);
    m.def("trade_prices_of", &dsmatch::trade_prices_of);

    // canonical sorts
    m.def("sort_bids_desc", &dsmatch::sort_bids_desc);
    m.def("sort_asks_asc", &dsmatch::sort_asks_asc);
    m.def("sort_asks_desc", &dsmatch::sort_asks_desc);
    m.def("sort_fills_by_bid_desc", &dsmatch::sort_fills_by_bid_desc);
    m.def("sort_fills_by_ask_asc", &dsmatch::sort_fills_by_ask_asc);

    // matching algorithms
    m.def("maximum_matching", &dsmatch::maximum_matching, py::arg("bids_desc"),
          py::arg("asks_desc"));
    m.def("make_individual_rational", &dsmatch::make_individual_rational);
    m.def("fair_maximal_match", &dsmatch::fair_maximal_match);
    m.def("make_fair_on_bids", &dsmatch::make_fair_on_bids, py::arg("matching"), py::arg("bids"));
    m.def("make_fair_on_asks", &dsmatch::make_fair_on_asks, py::arg("matching"), py::arg("asks"));
    m.def("fairify", &dsmatch::fairify, py::arg("book"), py::arg("matching"));
    m.def("uncross", &dsmatch::uncross, py::arg("bids_desc"), py::arg("asks_asc"));
    m.def("uniform_price", &dsmatch::uniform_price, py::arg("bids_desc"), py::arg("asks_asc"));
    m.def("uniform_matching", &dsmatch::uniform_matching, py::arg("book"));

    // property checkers
    m.def("all_matchable", &dsmatch::all_matchable);
    m.def("is_matching_in", &dsmatch::is_matching_in, py::arg("book"), py::arg("matching"));
    m.def("is_individual_rational", &dsmatch::is_individual_rational);
    m.def("is_uniform", &dsmatch::is_uniform);
    m.def("is_fair_on_bids", &dsmatch::is_fair_on_bids, py::arg("book"), py::arg("matching"));
    m.def("is_fair_on_asks", &dsmatch::is_fair_on_asks, py::arg("book"), py::arg("matching"));
    m.def("is_fair", &dsmatch::is_fair, py::arg("book"), py::arg("matching"));
    m.def("is_maximum", &dsmatch::is_maximum, py::arg("book"), py::arg("matching"));
    m.def("is_uniform_maximal", &dsmatch::is_uniform_maximal, py::arg("book"),
          py::arg("matching"));
    m.def("format_verdict", &dsmatch::format_verdict);

    // brute-force oracles
    m.def("max_matching_size",
          py::overload_cast<const dsmatch::OrderBook&>(&dsmatch::oracle::max_matching_size));
    m.def("max_uniform_size",
          py::overload_cast<const dsmatch::OrderBook&>(&dsmatch::oracle::max_uniform_size));
    m.def("enumerate_matchings", &dsmatch::oracle::enumerate_matchings, py::arg("book"),
          py::arg("per_side_limit") = 8);

    // flat-file formats
    m.def("load_book", &dsmatch::load_book, py::arg("path"));
    m.def("load_trades", &dsmatch::load_trades, py::arg("path"));
    m.def("book_from_csv", &book_from_csv, py::arg("text"));
    m.def("trades_from_csv", &trades_from_csv, py::arg("text"));
    m.def("join_trades", &dsmatch::join_trades, py::arg("book"), py::arg("rows"));
    m.def("format_trades", &dsmatch::format_trades, py::arg("matching"));
    m.def("save_trades", &dsmatch::save_trades, py::arg("path"), py::arg("matching"));

#ifdef DSMATCH_VERSION
    m.attr("__version__") = DSMATCH_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
