// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cassert>
#include <optional>
#include <utility>

#include "chaindns/errc.hpp"

namespace chaindns {

// Minimal expected-style result. An Errc other than Ok marks failure.
template <typename T>
class Result {
public:
    Result(T value) : value_(std::move(value)), err_(Errc::Ok) {}
    Result(Errc err) : err_(err) { assert(err != Errc::Ok); }

    bool ok() const { return err_ == Errc::Ok; }
    explicit operator bool() const { return ok(); }
    Errc error() const { return err_; }

    const T& value() const& {
        assert(ok());
        return *value_;
    }
    T& value() & {
        assert(ok());
        return *value_;
    }
    T&& take() && {
        assert(ok());
        return std::move(*value_);
    }

private:
    std::optional<T> value_;
    Errc err_;
};

template <>
class Result<void> {
public:
    Result() : err_(Errc::Ok) {}
    Result(Errc err) : err_(err) {}

    bool ok() const { return err_ == Errc::Ok; }
    explicit operator bool() const { return ok(); }
    Errc error() const { return err_; }

private:
    Errc err_;
};

}  // namespace chaindns
