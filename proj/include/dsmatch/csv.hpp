#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsmatch/core.hpp"

namespace dsmatch {

// Flat-file formats. Both are strict CSV: UTF-8, LF line endings, no
// quoting, every field an integer or a single letter, so identical inputs
// produce byte-identical outputs.
//
//   book:   header "side,id,price",       rows like "B,1,100" / "A,2,90"
//   trades: header "bid_id,ask_id,price", rows in fill order

struct TradeRow {
    OrderId bid_id{0};
    OrderId ask_id{0};
    Price price{0};

    friend bool operator==(const TradeRow&, const TradeRow&) = default;
};

OrderBook read_book(std::istream& in);
OrderBook load_book(const std::filesystem::path& path);

std::vector<TradeRow> read_trades(std::istream& in);
std::vector<TradeRow> load_trades(const std::filesystem::path& path);

// Resolves trade rows against the book by id. UnknownIdError when a row
// references an order the book does not contain.
Matching join_trades(const OrderBook& book, const std::vector<TradeRow>& rows);

std::string format_trades(const Matching& m);
void write_trades(std::ostream& out, const Matching& m);
void save_trades(const std::filesystem::path& path, const Matching& m);

}  // namespace dsmatch
