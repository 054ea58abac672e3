"""Double-sided auction matching, uniform price discovery and trade audit."""

from ._core import (
    Fill,
    MatchError,
    Order,
    OrderBook,
    Side,
    TradeRow,
    UniformResult,
    Verdict,
    all_matchable,
    asks_of,
    bids_of,
    book_from_csv,
    enumerate_matchings,
    fair_maximal_match,
    fairify,
    format_trades,
    format_verdict,
    is_fair,
    is_fair_on_asks,
    is_fair_on_bids,
    is_individual_rational,
    is_matching_in,
    is_maximum,
    is_uniform,
    is_uniform_maximal,
    join_trades,
    load_book,
    load_trades,
    make_ask,
    make_bid,
    make_fair_on_asks,
    make_fair_on_bids,
    make_individual_rational,
    make_order_book,
    max_matching_size,
    max_uniform_size,
    maximum_matching,
    prices_of,
    save_trades,
    sort_asks_asc,
    sort_asks_desc,
    sort_bids_desc,
    sort_fills_by_ask_asc,
    sort_fills_by_bid_desc,
    trade_prices_of,
    trades_from_csv,
    uncross,
    uniform_matching,
    uniform_price,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
