#include "atom_json.hpp"

#include <stdexcept>

namespace zerosum::detail {

nlohmann::ordered_json atom_to_json(const ZSeq& s) {
  nlohmann::ordered_json pos = nlohmann::ordered_json::array();
  nlohmann::ordered_json neg = nlohmann::ordered_json::array();
  for (const auto& [value, mult] : s.terms()) {
    if (value > 0) pos.push_back({value, mult});
    if (value < 0) neg.push_back({value, mult});
  }
  return {{"pos", pos}, {"neg", neg}, {"zero", s.multiplicity(0)}};
}

namespace {

void read_side(const nlohmann::json& side, bool positive, ZSeq& out) {
  if (!side.is_array())
    throw std::runtime_error("atom entry: side is not an array");
  long long prev = positive ? 0 : -(kMaxTermValue + 1);
  for (const auto& pair : side) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw std::runtime_error("atom entry: malformed [value,mult] pair");
    long long value = pair[0].get<long long>();
    long long mult = pair[1].get<long long>();
    if (positive ? value <= 0 : value >= 0)
      throw std::runtime_error("atom entry: value on wrong side");
    if (value <= prev)
      throw std::runtime_error("atom entry: values not strictly ascending");
    if (mult < 1) throw std::runtime_error("atom entry: multiplicity < 1");
    prev = value;
    try {
      out.add(static_cast<int>(value), mult);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("atom entry: ") + e.what());
    }
  }
}

}  // namespace

ZSeq atom_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pos") || !j.contains("neg") ||
      !j.contains("zero"))
    throw std::runtime_error("atom entry: expected {pos, neg, zero}");
  ZSeq out;
  read_side(j["pos"], true, out);
  read_side(j["neg"], false, out);
  const auto& zero = j["zero"];
  if (!zero.is_number_integer() ||
      (zero.get<long long>() != 0 && zero.get<long long>() != 1))
    throw std::runtime_error("atom entry: zero flag must be 0 or 1");
  if (zero.get<long long>() == 1) out.add(0, 1);
  if (out.trivial()) throw std::runtime_error("atom entry: empty sequence");
  return out;
}

}  // namespace zerosum::detail
