#include "eqx/types.hpp"

#include <charconv>

namespace eqx {

ItemSet ItemSet::range(std::size_t m) {
    if (m > kMaxItems) throw InputError("item count " + std::to_string(m) + " exceeds capacity");
    ItemSet s;
    for (std::size_t k = 0; k < s.words_.size(); ++k) {
        const std::size_t lo = k * 64;
        if (m >= lo + 64)
            s.words_[k] = ~std::uint64_t{0};
        else if (m > lo)
            s.words_[k] = (std::uint64_t{1} << (m - lo)) - 1;
    }
    return s;
}

std::vector<Item> ItemSet::items() const {
    std::vector<Item> out;
    out.reserve(size());
    for_each([&](Item x) { out.push_back(x); });
    return out;
}

bool ItemSet::has_item_at_or_above(std::size_t limit) const noexcept {
    if (limit >= kMaxItems) return false;
    return !is_subset_of(range(limit));
}

Epsilon::Epsilon(Value num, Value den) : num_(num), den_(den) {
    if (den <= 0) throw InputError("epsilon denominator must be positive");
    if (num < 0 || num >= den) throw InputError("epsilon must lie in [0, 1)");
}

namespace {

Value parse_int(std::string_view text) {
    Value v{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw InputError("invalid integer '" + std::string(text) + "'");
    return v;
}

}  // namespace

Epsilon Epsilon::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const Value v = parse_int(text);
        if (v != 0) throw InputError("epsilon must be written a/b");
        return {};
    }
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Epsilon::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string_view to_string(Direction d) { return d == Direction::goods ? "goods" : "chores"; }

Direction parse_direction(std::string_view text) {
    if (text == "goods") return Direction::goods;
    if (text == "chores") return Direction::chores;
    throw InputError("unknown direction '" + std::string(text) + "'");
}

}  // namespace eqx
