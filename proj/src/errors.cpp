#include "dsmatch/errors.hpp"

namespace dsmatch {

namespace {

std::string side_name(Side side) { return side == Side::Bid ? "bid" : "ask"; }

}  // namespace

DuplicateIdError::DuplicateIdError(Side side, OrderId id)
    : Error("duplicate " + side_name(side) + " id " + std::to_string(id)),
      side_(side),
      id_(id) {}

UnknownIdError::UnknownIdError(Side side, OrderId id)
    : Error("unknown " + side_name(side) + " id " + std::to_string(id)),
      side_(side),
      id_(id) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

NegativePriceError::NegativePriceError(std::size_t line)
    : Error("line " + std::to_string(line) + ": negative price"), line_(line) {}

}  // namespace dsmatch
