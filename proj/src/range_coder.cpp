#include "dmdt/range_coder.hpp"

#include <algorithm>
#include <string>

#include "dmdt/error.hpp"

namespace dmdt {

namespace {

constexpr std::uint32_t kProbMin = 32;
constexpr std::uint32_t kProbMax = (1u << 16) - 32;
constexpr std::uint32_t kHalf = 1u << 15;

// Split point: [low, mid] codes a 1, [mid + 1, high] codes a 0. p1 < 2^16
// keeps mid < high, so both halves are non-empty.
std::uint32_t split(std::uint32_t low, std::uint32_t high, std::uint32_t p1) {
    const std::uint64_t range = static_cast<std::uint64_t>(high - low);
    return low + static_cast<std::uint32_t>((range * p1) >> 16);
}

} // namespace

void BitModel::update(int bit) noexcept {
    const std::uint32_t shift = 2 + std::min<std::uint32_t>(seen_, 3);
    if (seen_ < 3)
        ++seen_;
    if (bit)
        p_ += ((1u << 16) - p_) >> shift;
    else
        p_ -= p_ >> shift;
    p_ = std::clamp(p_, kProbMin, kProbMax);
}

void BinaryEncoder::encode_with(int bit, std::uint32_t p1) {
    const std::uint32_t mid = split(low_, high_, p1);
    if (bit)
        high_ = mid;
    else
        low_ = mid + 1;
    while (((low_ ^ high_) & 0xFF000000u) == 0) {
        out_.push_back(static_cast<std::uint8_t>(high_ >> 24));
        low_ <<= 8;
        high_ = (high_ << 8) | 0xFFu;
    }
}

void BinaryEncoder::encode(int bit, BitModel& model) {
    encode_with(bit, model.p1());
    model.update(bit);
}

void BinaryEncoder::encode_raw(int bit) { encode_with(bit, kHalf); }

std::vector<std::uint8_t> BinaryEncoder::finish() {
    for (int i = 0; i < 4; ++i) {
        out_.push_back(static_cast<std::uint8_t>(low_ >> 24));
        low_ <<= 8;
    }
    low_ = 0;
    high_ = 0xFFFFFFFFu;
    return std::move(out_);
}

BinaryDecoder::BinaryDecoder(std::span<const std::uint8_t> payload) : in_(payload) {
    if (in_.size() < 4)
        throw DecodeError("entropy payload truncated: fewer than 4 bytes");
    for (int i = 0; i < 4; ++i)
        code_ = (code_ << 8) | next_byte();
}

std::uint8_t BinaryDecoder::next_byte() {
    if (pos_ >= in_.size())
        throw DecodeError("entropy payload truncated: coder read past the end");
    return in_[pos_++];
}

int BinaryDecoder::decode_with(std::uint32_t p1) {
    if (code_ < low_ || code_ > high_)
        throw DecodeError("entropy payload corrupt: code value left the coding interval");
    const std::uint32_t mid = split(low_, high_, p1);
    const int bit = code_ <= mid ? 1 : 0;
    if (bit)
        high_ = mid;
    else
        low_ = mid + 1;
    while (((low_ ^ high_) & 0xFF000000u) == 0) {
        low_ <<= 8;
        high_ = (high_ << 8) | 0xFFu;
        code_ = (code_ << 8) | next_byte();
    }
    return bit;
}

int BinaryDecoder::decode(BitModel& model) {
    const int bit = decode_with(model.p1());
    model.update(bit);
    return bit;
}

int BinaryDecoder::decode_raw() { return decode_with(kHalf); }

void BinaryDecoder::finish() const {
    if (code_ != low_)
        throw DecodeError("entropy payload corrupt: final code value does not match coder state");
    if (pos_ != in_.size())
        throw DecodeError("entropy payload corrupt: " + std::to_string(in_.size() - pos_) +
                          " trailing bytes");
}

} // namespace dmdt
