// dsmatch command-line front end: run matching algorithms on CSV order
// books, re-fair existing trade files, audit trades against the regulatory
// properties, and print brute-force oracle sizes.
//
// Exit codes: 0 success (all checks pass), 1 at least one check failed,
// 2 input or usage error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsmatch/dsmatch.hpp"

namespace {

std::vector<std::string> split_csv_list(const std::string& list) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(list.substr(start));
            break;
        }
        out.push_back(list.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

int run_algo(const std::string& algo, const std::string& book_path,
             const std::string& out_path, bool apply_ir, bool two_pass) {
    const dsmatch::OrderBook book = dsmatch::load_book(book_path);
    dsmatch::Matching trades;
    if (algo == "mm") {
        trades = dsmatch::maximum_matching(dsmatch::sort_bids_desc(book.bids),
                                           dsmatch::sort_asks_desc(book.asks));
    } else if (algo == "fair-mm") {
        if (two_pass) {
            // Two-pass route: greedy maximum matching, then the full
            // bid+ask fairify pipeline instead of the single ask pass.
            trades = dsmatch::fairify(
                book, dsmatch::maximum_matching(dsmatch::sort_bids_desc(book.bids),
                                                dsmatch::sort_asks_desc(book.asks)));
        } else {
            trades = dsmatch::fair_maximal_match(book);
        }
    } else {  // um
        trades = dsmatch::uniform_matching(book).matching;
    }
    if (apply_ir && algo != "um") {
        trades = dsmatch::make_individual_rational(trades);
    }
    dsmatch::save_trades(out_path, trades);
    return 0;
}

int run_fairify(const std::string& book_path, const std::string& trades_path,
                const std::string& out_path) {
    const dsmatch::OrderBook book = dsmatch::load_book(book_path);
    const dsmatch::Matching m = dsmatch::join_trades(book, dsmatch::load_trades(trades_path));
    dsmatch::save_trades(out_path, dsmatch::fairify(book, m));
    return 0;
}

int run_check(const std::string& book_path, const std::string& trades_path,
              const std::string& properties) {
    const dsmatch::OrderBook book = dsmatch::load_book(book_path);
    const dsmatch::Matching m = dsmatch::join_trades(book, dsmatch::load_trades(trades_path));

    bool all_passed = true;
    for (const std::string& property : split_csv_list(properties)) {
        dsmatch::Verdict verdict;
        if (property == "matching") {
            verdict = dsmatch::is_matching_in(book, m);
        } else if (property == "ir") {
            verdict = dsmatch::is_individual_rational(m);
        } else if (property == "uniform") {
            verdict = dsmatch::is_uniform(m);
        } else if (property == "fair") {
            verdict = dsmatch::is_fair(book, m);
        } else if (property == "maximal") {
            verdict = dsmatch::is_maximum(book, m);
        } else if (property == "uniform-maximal") {
            verdict = dsmatch::is_uniform_maximal(book, m);
        } else {
            std::cerr << "error: unknown property '" << property << "'\n";
            return 2;
        }
        std::cout << dsmatch::format_verdict(verdict) << "\n";
        all_passed = all_passed && verdict.passed;
    }
    return all_passed ? 0 : 1;
}

int run_oracle(const std::string& book_path) {
    const dsmatch::OrderBook book = dsmatch::load_book(book_path);
    std::cout << "max=" << dsmatch::oracle::max_matching_size(book) << "\n"
              << "uniform_max=" << dsmatch::oracle::max_uniform_size(book) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dsmatch: double-sided auction matching and trade audit"};
    app.require_subcommand(1);

    std::string algo;
    std::string book_path;
    std::string trades_path;
    std::string out_path;
    std::string properties = "matching,ir,uniform,fair,maximal,uniform-maximal";
    bool apply_ir = false;
    bool two_pass = false;

    CLI::App* run = app.add_subcommand("run", "Match a book and write a trade file");
    run->add_option("--algo", algo, "Algorithm: mm, um or fair-mm")
        ->required()
        ->check(CLI::IsMember({"mm", "um", "fair-mm"}));
    run->add_option("--book", book_path, "Order book CSV")->required();
    run->add_option("--out", out_path, "Output trade CSV")->required();
    run->add_flag("--ir", apply_ir,
                  "Reprice fills at the floor midpoint (ignored for um)");
    run->add_flag("--two-pass", two_pass,
                  "With fair-mm, run the full bid+ask fairify pipeline");

    CLI::App* fairify = app.add_subcommand("fairify", "Re-fair an existing trade file");
    fairify->add_option("--book", book_path, "Order book CSV")->required();
    fairify->add_option("--trades", trades_path, "Input trade CSV")->required();
    fairify->add_option("--out", out_path, "Output trade CSV")->required();

    CLI::App* check = app.add_subcommand("check", "Audit a trade file against a book");
    check->add_option("--book", book_path, "Order book CSV")->required();
    check->add_option("--trades", trades_path, "Trade CSV to audit")->required();
    check->add_option("--properties", properties,
                      "Comma-separated subset of: matching, ir, uniform, fair, "
                      "maximal, uniform-maximal (default: all)");

    CLI::App* oracle = app.add_subcommand("oracle", "Print brute-force matching bounds");
    oracle->add_option("--book", book_path, "Order book CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(run)) {
            return run_algo(algo, book_path, out_path, apply_ir, two_pass);
        }
        if (app.got_subcommand(fairify)) {
            return run_fairify(book_path, trades_path, out_path);
        }
        if (app.got_subcommand(check)) {
            return run_check(book_path, trades_path, properties);
        }
        return run_oracle(book_path);
    } catch (const dsmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
