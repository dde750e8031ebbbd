// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/types.hpp"

namespace chaindns {

bool valid_label(std::string_view label) {
    if (label.empty() || label.size() > 63) return false;
    auto head = label.front();
    if (!((head >= 'a' && head <= 'z') || (head >= '0' && head <= '9'))) return false;
    for (char c : label.substr(1)) {
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) return false;
    }
    return true;
}

std::optional<DomainName> parse_domain(std::string_view domain) {
    auto dot = domain.find('.');
    if (dot == std::string_view::npos || domain.find('.', dot + 1) != std::string_view::npos) {
        return std::nullopt;
    }
    auto name = domain.substr(0, dot);
    auto tld = domain.substr(dot + 1);
    if (!valid_label(name) || !valid_label(tld)) return std::nullopt;
    return DomainName{std::string(name), std::string(tld)};
}

}  // namespace chaindns
