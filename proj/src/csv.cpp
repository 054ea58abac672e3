#include "dsmatch/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "dsmatch/errors.hpp"

namespace dsmatch {

namespace {

constexpr std::string_view kBookHeader = "side,id,price";
constexpr std::string_view kTradeHeader = "bid_id,ask_id,price";

// Strict line splitter: LF separators only, an optional trailing LF, no CR
// handling (a stray CR fails integer parsing downstream).
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        if (eol == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, eol));
        text.remove_prefix(eol + 1);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            fields.push_back(line);
            return fields;
        }
        fields.push_back(line.substr(0, comma));
        line.remove_prefix(comma + 1);
    }
}

std::int64_t parse_int(std::string_view field, std::size_t line, const char* what) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

OrderId parse_id(std::string_view field, std::size_t line, const char* what) {
    const std::int64_t value = parse_int(field, line, what);
    if (value < 0) throw ParseError(line, std::string("negative ") + what);
    return value;
}

Price parse_price(std::string_view field, std::size_t line) {
    const std::int64_t value = parse_int(field, line, "price");
    if (value < 0) throw NegativePriceError(line);
    return value;
}

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

OrderBook read_book(std::istream& in) {
    const std::string text = read_all(in);
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty() || lines[0] != kBookHeader) {
        throw ParseError(1, "expected header '" + std::string(kBookHeader) + "'");
    }
    std::vector<Order> bids;
    std::vector<Order> asks;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 3) throw ParseError(line_no, "expected 3 fields");
        const Price price = parse_price(fields[2], line_no);
        const OrderId id = parse_id(fields[1], line_no, "id");
        if (fields[0] == "B") {
            bids.push_back(make_bid(price, id));
        } else if (fields[0] == "A") {
            asks.push_back(make_ask(price, id));
        } else {
            throw ParseError(line_no, "invalid side '" + std::string(fields[0]) + "'");
        }
    }
    return make_order_book(std::move(bids), std::move(asks));
}

OrderBook load_book(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_book(in);
}

std::vector<TradeRow> read_trades(std::istream& in) {
    const std::string text = read_all(in);
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty() || lines[0] != kTradeHeader) {
        throw ParseError(1, "expected header '" + std::string(kTradeHeader) + "'");
    }
    std::vector<TradeRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 3) throw ParseError(line_no, "expected 3 fields");
        TradeRow row;
        row.bid_id = parse_id(fields[0], line_no, "bid_id");
        row.ask_id = parse_id(fields[1], line_no, "ask_id");
        row.price = parse_price(fields[2], line_no);
        rows.push_back(row);
    }
    return rows;
}

std::vector<TradeRow> load_trades(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_trades(in);
}

Matching join_trades(const OrderBook& book, const std::vector<TradeRow>& rows) {
    std::unordered_map<OrderId, Order> bids;
    bids.reserve(book.bids.size());
    for (const Order& b : book.bids) bids.emplace(b.id, b);
    std::unordered_map<OrderId, Order> asks;
    asks.reserve(book.asks.size());
    for (const Order& a : book.asks) asks.emplace(a.id, a);

    Matching m;
    m.reserve(rows.size());
    for (const TradeRow& row : rows) {
        const auto bid = bids.find(row.bid_id);
        if (bid == bids.end()) throw UnknownIdError(Side::Bid, row.bid_id);
        const auto ask = asks.find(row.ask_id);
        if (ask == asks.end()) throw UnknownIdError(Side::Ask, row.ask_id);
        m.push_back(Fill{bid->second, ask->second, row.price});
    }
    return m;
}

std::string format_trades(const Matching& m) {
    std::string out{kTradeHeader};
    out += '\n';
    for (const Fill& f : m) {
        out += std::to_string(f.bid.id);
        out += ',';
        out += std::to_string(f.ask.id);
        out += ',';
        out += std::to_string(f.trade_price);
        out += '\n';
    }
    return out;
}

void write_trades(std::ostream& out, const Matching& m) { out << format_trades(m); }

void save_trades(const std::filesystem::path& path, const Matching& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string());
    write_trades(out, m);
}

}  // namespace dsmatch
