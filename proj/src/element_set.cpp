#include "kneser/element_set.hpp"

#include <charconv>

namespace kneser {

ElementSet ElementSet::parse(std::string_view text, int ground) {
    ElementSet s(ground);
    if (text.empty() || text == "-") return s;
    int prev = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        require(ec == std::errc{} && ptr == tok.data() + tok.size(),
                "set literal: expected comma-separated integers");
        require(value > prev, "set literal: elements must be strictly ascending");
        s.insert(value);
        prev = value;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return s;
}

std::string ElementSet::to_string() const {
    std::string out;
    for (int x : elements()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(x);
    }
    return out;
}

}  // namespace kneser
