// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/errc.hpp"

namespace chaindns {

std::string_view errc_name(Errc e) {
    switch (e) {
        case Errc::Ok: return "Ok";
        case Errc::StaleNonce: return "StaleNonce";
        case Errc::UnknownCall: return "UnknownCall";
        case Errc::TldTaken: return "TldTaken";
        case Errc::InvalidLabel: return "InvalidLabel";
        case Errc::DomainTaken: return "DomainTaken";
        case Errc::WrongTld: return "WrongTld";
        case Errc::InsufficientMaintainers: return "InsufficientMaintainers";
        case Errc::MaintainerConflict: return "MaintainerConflict";
        case Errc::NotAuthorized: return "NotAuthorized";
        case Errc::NotFound: return "NotFound";
        case Errc::AlreadyAvailable: return "AlreadyAvailable";
        case Errc::NotOwner: return "NotOwner";
        case Errc::Unavailable: return "Unavailable";
        case Errc::QueueFull: return "QueueFull";
        case Errc::DuplicateProvider: return "DuplicateProvider";
        case Errc::UnknownProvider: return "UnknownProvider";
        case Errc::MalformedValue: return "MalformedValue";
        case Errc::InvalidDomain: return "InvalidDomain";
        case Errc::TldNotFound: return "TldNotFound";
        case Errc::DomainNotFound: return "DomainNotFound";
        case Errc::DomainRevoked: return "DomainRevoked";
        case Errc::TransportError: return "TransportError";
        case Errc::UnknownMethod: return "UnknownMethod";
        case Errc::NetworkUnreachable: return "NetworkUnreachable";
        case Errc::DuplicateNetworkId: return "DuplicateNetworkId";
        case Errc::InvalidEvent: return "InvalidEvent";
        case Errc::SetupFailed: return "SetupFailed";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace chaindns
