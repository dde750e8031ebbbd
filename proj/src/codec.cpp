// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/codec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chaindns::codec {

Bytes enc(std::string_view s) {
    Bytes out;
    out.reserve(4 + s.size());
    std::uint32_t len = static_cast<std::uint32_t>(s.size());
    out.push_back(static_cast<std::uint8_t>(len));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 24));
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

void Writer::u32le(std::uint32_t v) {
    out_.push_back(static_cast<std::uint8_t>(v));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v >> 16));
    out_.push_back(static_cast<std::uint8_t>(v >> 24));
}

void Writer::u64le(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::raw(const std::uint8_t* data, std::size_t len) {
    out_.insert(out_.end(), data, data + len);
}

void Writer::str(std::string_view s) {
    u32le(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
}

std::uint8_t Reader::u8() {
    if (failed_ || size_ - pos_ < 1) {
        failed_ = true;
        return 0;
    }
    return data_[pos_++];
}

std::uint32_t Reader::u32le() {
    if (failed_ || size_ - pos_ < 4) {
        failed_ = true;
        return 0;
    }
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
    return v;
}

std::uint64_t Reader::u64le() {
    if (failed_ || size_ - pos_ < 8) {
        failed_ = true;
        return 0;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_++]) << (8 * i);
    return v;
}

Bytes Reader::raw(std::size_t len) {
    if (failed_ || size_ - pos_ < len) {
        failed_ = true;
        return {};
    }
    Bytes out(data_ + pos_, data_ + pos_ + len);
    pos_ += len;
    return out;
}

std::string Reader::str() {
    std::uint32_t len = u32le();
    Bytes raw_bytes = raw(len);
    if (failed_) return {};
    return std::string(raw_bytes.begin(), raw_bytes.end());
}

void write_chain_spec(Writer& w, const ChainSpec& spec) {
    w.str(spec.name);
    w.str(spec.id);
    w.u32le(static_cast<std::uint32_t>(spec.payload.size()));
    w.raw(spec.payload);
}

ChainSpec read_chain_spec(Reader& r) {
    ChainSpec spec;
    spec.name = r.str();
    spec.id = r.str();
    std::uint32_t payload_size = r.u32le();
    spec.payload = r.raw(payload_size);
    return spec;
}

void write_domain_info(Writer& w, const DomainInformation& info) {
    w.id(info.creator);
    w.u8(info.chain_specifications ? 1 : 0);
    if (info.chain_specifications) write_chain_spec(w, *info.chain_specifications);
    w.u32le(static_cast<std::uint32_t>(info.maintainers.size()));
    for (const auto& m : info.maintainers) w.id(m);
    w.u8(info.available ? 1 : 0);
}

DomainInformation read_domain_info(Reader& r) {
    DomainInformation info;
    info.creator = r.id<AccountIdTag>();
    std::uint8_t has_spec = r.u8();
    if (has_spec == 1) {
        info.chain_specifications = read_chain_spec(r);
    } else if (has_spec != 0) {
        r.fail();  // invalid option tag
    }
    std::uint32_t n = r.u32le();
    for (std::uint32_t i = 0; i < n && !r.failed(); ++i) {
        info.maintainers.push_back(r.id<NodeIdTag>());
    }
    std::uint8_t avail = r.u8();
    if (avail > 1) r.fail();
    info.available = avail == 1;
    return info;
}

void write_pending_request(Writer& w, const PendingRequest& req) {
    w.id(req.requester);
    w.str(req.domain);
    w.id(req.asset_hash);
    w.u64le(req.timestamp);
}

PendingRequest read_pending_request(Reader& r) {
    PendingRequest req;
    req.requester = r.id<AccountIdTag>();
    req.domain = r.str();
    req.asset_hash = r.id<AssetHashTag>();
    req.timestamp = r.u64le();
    return req;
}

Bytes encode_chain_spec(const ChainSpec& spec) {
    Writer w;
    write_chain_spec(w, spec);
    return std::move(w).take();
}

Result<ChainSpec> decode_chain_spec(const Bytes& raw) {
    Reader r(raw);
    ChainSpec spec = read_chain_spec(r);
    if (!r.complete()) return Errc::MalformedValue;
    return spec;
}

Bytes encode_domain_info(const DomainInformation& info) {
    Writer w;
    write_domain_info(w, info);
    return std::move(w).take();
}

Result<DomainInformation> decode_domain_info(const Bytes& raw) {
    Reader r(raw);
    DomainInformation info = read_domain_info(r);
    if (!r.complete()) return Errc::MalformedValue;
    return info;
}

std::string chain_spec_to_json(const ChainSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = spec.name;
    j["id"] = spec.id;
    j["payload_b64"] = base64_encode(spec.payload);
    return j.dump();
}

Result<void> save_chain_spec_file(const ChainSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return Errc::IoError;
    out << chain_spec_to_json(spec) << '\n';
    out.close();
    return out ? Result<void>{} : Errc::IoError;
}

Result<ChainSpec> load_chain_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return Errc::IoError;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return chain_spec_from_json(buffer.str());
}

Result<ChainSpec> chain_spec_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return Errc::MalformedValue;
    if (!j.contains("name") || !j["name"].is_string()) return Errc::MalformedValue;
    if (!j.contains("id") || !j["id"].is_string()) return Errc::MalformedValue;
    if (!j.contains("payload_b64") || !j["payload_b64"].is_string()) return Errc::MalformedValue;
    auto payload = base64_decode(j["payload_b64"].get<std::string>());
    if (!payload) return Errc::MalformedValue;
    ChainSpec spec;
    spec.name = j["name"].get<std::string>();
    spec.id = j["id"].get<std::string>();
    spec.payload = std::move(*payload);
    if (spec.name.empty() || spec.id.empty()) return Errc::MalformedValue;
    return spec;
}

}  // namespace chaindns::codec
