// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <string>

#include "chaindns/bytes.hpp"
#include "chaindns/result.hpp"
#include "chaindns/types.hpp"

namespace chaindns::codec {

// Canonical string encoding: 4-byte little-endian byte length followed by
// the UTF-8 bytes. Injective over all strings.
Bytes enc(std::string_view s);

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32le(std::uint32_t v);
    void u64le(std::uint64_t v);
    void raw(const std::uint8_t* data, std::size_t len);
    void raw(const Bytes& b) { raw(b.data(), b.size()); }
    void str(std::string_view s);

    template <typename Tag>
    void id(const Id32<Tag>& v) {
        raw(v.bytes.data(), v.bytes.size());
    }

    const Bytes& bytes() const& { return out_; }
    Bytes take() && { return std::move(out_); }

private:
    Bytes out_;
};

// Cursor over an immutable byte buffer. Any out-of-bounds read latches the
// failure flag; callers check failed()/done() once at the end.
class Reader {
public:
    explicit Reader(const Bytes& b) : data_(b.data()), size_(b.size()) {}
    Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    std::uint8_t u8();
    std::uint32_t u32le();
    std::uint64_t u64le();
    Bytes raw(std::size_t len);
    std::string str();

    template <typename Tag>
    Id32<Tag> id() {
        Id32<Tag> v;
        Bytes b = raw(32);
        if (!failed_) std::copy(b.begin(), b.end(), v.bytes.begin());
        return v;
    }

    void fail() { failed_ = true; }
    bool failed() const { return failed_; }
    bool done() const { return pos_ == size_; }
    // Strict framing: everything consumed and nothing under-read.
    bool complete() const { return !failed_ && done(); }

private:
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

void write_chain_spec(Writer& w, const ChainSpec& spec);
ChainSpec read_chain_spec(Reader& r);

void write_domain_info(Writer& w, const DomainInformation& info);
DomainInformation read_domain_info(Reader& r);

void write_pending_request(Writer& w, const PendingRequest& req);
PendingRequest read_pending_request(Reader& r);

Bytes encode_chain_spec(const ChainSpec& spec);
Result<ChainSpec> decode_chain_spec(const Bytes& raw);

Bytes encode_domain_info(const DomainInformation& info);
Result<DomainInformation> decode_domain_info(const Bytes& raw);

// ChainSpec on-disk format: {"name": string, "id": string, "payload_b64": string}.
// The root network's connection details are distributed out-of-band as such
// a file.
std::string chain_spec_to_json(const ChainSpec& spec);
Result<ChainSpec> chain_spec_from_json(const std::string& text);
Result<void> save_chain_spec_file(const ChainSpec& spec, const std::string& path);
Result<ChainSpec> load_chain_spec_file(const std::string& path);

}  // namespace chaindns::codec
