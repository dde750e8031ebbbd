// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <string_view>

namespace chaindns {

// Unified error space across the ledger, the registries and the clients.
// Dispatch-level errors (StaleNonce, UnknownCall) cause a transaction to be
// dropped from the block; registry errors leave the transaction included
// with its fee collected.
enum class Errc {
    Ok = 0,

    // ledger
    StaleNonce,
    UnknownCall,

    // root registry
    TldTaken,
    InvalidLabel,

    // tld registry
    DomainTaken,
    WrongTld,
    InsufficientMaintainers,
    MaintainerConflict,
    NotAuthorized,
    NotFound,
    AlreadyAvailable,
    NotOwner,
    Unavailable,

    // asset discovery
    QueueFull,
    DuplicateProvider,
    UnknownProvider,

    // codecs / transport / client
    MalformedValue,
    InvalidDomain,
    TldNotFound,
    DomainNotFound,
    DomainRevoked,
    TransportError,
    UnknownMethod,
    NetworkUnreachable,
    DuplicateNetworkId,
    InvalidEvent,
    SetupFailed,
    IoError,
};

std::string_view errc_name(Errc e);

inline bool dispatch_drops(Errc e) {
    return e == Errc::StaleNonce || e == Errc::UnknownCall;
}

}  // namespace chaindns
