#include "dmdt/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "dmdt/entropy.hpp"
#include "dmdt/error.hpp"

namespace dmdt::huffman {

void BitWriter::put(std::uint32_t value, unsigned bits) {
    for (unsigned k = bits; k-- > 0;) {
        acc_ = (acc_ << 1) | ((value >> k) & 1u);
        if (++used_ == 8) {
            out_.push_back(static_cast<std::uint8_t>(acc_));
            acc_ = 0;
            used_ = 0;
        }
    }
}

std::vector<std::uint8_t> BitWriter::finish() {
    if (used_ > 0) {
        out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - used_)));
        acc_ = 0;
        used_ = 0;
    }
    return std::move(out_);
}

std::uint32_t BitReader::get(unsigned bits) {
    if (bitpos_ + bits > in_.size() * 8)
        throw DecodeError("Huffman stream truncated");
    std::uint32_t v = 0;
    for (unsigned k = 0; k < bits; ++k, ++bitpos_)
        v = (v << 1) | ((in_[bitpos_ >> 3] >> (7 - (bitpos_ & 7))) & 1u);
    return v;
}

void BitReader::finish() const {
    const std::size_t total = in_.size() * 8;
    if (total - bitpos_ >= 8)
        throw DecodeError("Huffman stream corrupt: trailing bytes");
    for (std::size_t p = bitpos_; p < total; ++p)
        if ((in_[p >> 3] >> (7 - (p & 7))) & 1u)
            throw DecodeError("Huffman stream corrupt: non-zero padding");
}

std::vector<unsigned> code_lengths(std::span<const std::uint64_t> freqs, unsigned max_len) {
    const std::size_t n = freqs.size();
    std::vector<unsigned> len(n, 0);
    std::vector<std::size_t> used;
    for (std::size_t s = 0; s < n; ++s)
        if (freqs[s] > 0)
            used.push_back(s);
    if (used.empty())
        return len;
    if (used.size() == 1) {
        len[used[0]] = 1;
        return len;
    }

    // Nodes: leaves first, then internal nodes. Ordering key (weight, id)
    // makes the merge sequence deterministic.
    std::vector<std::size_t> parent(2 * used.size() - 1, 0);
    using Item = std::tuple<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t i = 0; i < used.size(); ++i)
        heap.emplace(freqs[used[i]], i);
    std::size_t next = used.size();
    while (heap.size() > 1) {
        const auto [wa, a] = heap.top();
        heap.pop();
        const auto [wb, b] = heap.top();
        heap.pop();
        parent[a] = next;
        parent[b] = next;
        heap.emplace(wa + wb, next);
        ++next;
    }
    const std::size_t root = next - 1;
    std::vector<unsigned> depth(next, 0);
    for (std::size_t v = root; v-- > 0;)
        depth[v] = depth[parent[v]] + 1;
    for (std::size_t i = 0; i < used.size(); ++i)
        len[used[i]] = depth[i];

    // Length limiting: clamp, then lengthen the longest codes still below
    // the cap until the Kraft sum fits again.
    const unsigned longest = *std::max_element(len.begin(), len.end());
    if (longest > max_len) {
        std::uint64_t kraft = 0;
        const std::uint64_t one = std::uint64_t{1} << max_len;
        for (std::size_t s : used) {
            len[s] = std::min(len[s], max_len);
            kraft += one >> len[s];
        }
        while (kraft > one) {
            std::size_t pick = n;
            for (std::size_t s : used)
                if (len[s] < max_len && (pick == n || len[s] > len[pick] ||
                                         (len[s] == len[pick] && freqs[s] < freqs[pick])))
                    pick = s;
            kraft -= (one >> len[pick]) - (one >> (len[pick] + 1));
            ++len[pick];
        }
    }
    return len;
}

std::vector<std::uint32_t> canonical_codes(std::span<const unsigned> lengths) {
    std::vector<std::uint32_t> codes(lengths.size(), 0);
    std::uint32_t code = 0;
    unsigned maxl = 0;
    for (unsigned l : lengths)
        maxl = std::max(maxl, l);
    for (unsigned l = 1; l <= maxl; ++l) {
        for (std::size_t s = 0; s < lengths.size(); ++s)
            if (lengths[s] == l)
                codes[s] = code++;
        code <<= 1;
    }
    return codes;
}

Decoder::Decoder(std::span<const unsigned> lengths)
    : first_code_(kMaxCodeLength + 2, 0), first_index_(kMaxCodeLength + 2, 0),
      count_(kMaxCodeLength + 2, 0) {
    for (unsigned l : lengths) {
        if (l > kMaxCodeLength)
            throw DecodeError("Huffman table has a code longer than " +
                              std::to_string(kMaxCodeLength) + " bits");
        if (l > 0)
            ++count_[l];
    }
    // Kraft check rejects over-subscribed tables from corrupt headers.
    std::uint64_t kraft = 0;
    for (unsigned l = 1; l <= kMaxCodeLength; ++l)
        kraft += static_cast<std::uint64_t>(count_[l]) << (kMaxCodeLength - l);
    if (kraft > (std::uint64_t{1} << kMaxCodeLength))
        throw DecodeError("Huffman table is over-subscribed");

    std::uint32_t code = 0;
    std::uint32_t index = 0;
    for (unsigned l = 1; l <= kMaxCodeLength; ++l) {
        first_code_[l] = code;
        first_index_[l] = index;
        code = (code + count_[l]) << 1;
        index += count_[l];
    }
    for (unsigned l = 1; l <= kMaxCodeLength; ++l)
        for (std::size_t s = 0; s < lengths.size(); ++s)
            if (lengths[s] == l)
                symbols_.push_back(static_cast<unsigned>(s));
}

unsigned Decoder::decode(BitReader& in) const {
    std::uint32_t code = 0;
    for (unsigned l = 1; l <= kMaxCodeLength; ++l) {
        code = (code << 1) | in.get(1);
        if (count_[l] > 0 && code >= first_code_[l] && code - first_code_[l] < count_[l])
            return symbols_[first_index_[l] + (code - first_code_[l])];
    }
    throw DecodeError("Huffman stream corrupt: invalid code word");
}

namespace {
constexpr unsigned kSymbolCountBits = 6;
constexpr unsigned kLengthBits = 5;
} // namespace

std::vector<std::uint8_t> encode_symbols(std::span<const std::int32_t> values) {
    std::vector<std::uint64_t> freqs(entropy::kMaxBucket + 1, 0);
    for (std::int32_t v : values)
        ++freqs[entropy::bucket_of(entropy::zigzag(v))];

    std::size_t nsym = 0;
    for (std::size_t s = 0; s < freqs.size(); ++s)
        if (freqs[s] > 0)
            nsym = s + 1;
    const auto lengths = code_lengths(std::span(freqs).first(nsym));
    const auto codes = canonical_codes(lengths);

    BitWriter w;
    w.put(static_cast<std::uint32_t>(nsym), kSymbolCountBits);
    for (unsigned l : lengths)
        w.put(l, kLengthBits);
    for (std::int32_t v : values) {
        const std::uint32_t u = entropy::zigzag(v);
        const unsigned b = entropy::bucket_of(u);
        w.put(codes[b], lengths[b]);
        if (b > 1)
            w.put(u & ((1u << (b - 1)) - 1u), b - 1);
    }
    return w.finish();
}

std::vector<std::int32_t> decode_symbols(std::span<const std::uint8_t> bytes, std::size_t count) {
    BitReader r(bytes);
    const std::size_t nsym = r.get(kSymbolCountBits);
    if (nsym > entropy::kMaxBucket + 1)
        throw DecodeError("Huffman table declares too many symbols");
    std::vector<unsigned> lengths(nsym);
    for (auto& l : lengths)
        l = r.get(kLengthBits);
    if (count > 0 && nsym == 0)
        throw DecodeError("Huffman table is empty but symbols are expected");

    std::vector<std::int32_t> out;
    out.reserve(std::min<std::size_t>(count, std::size_t{1} << 20));
    if (count > 0) {
        const Decoder dec(lengths);
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned b = dec.decode(r);
            std::uint32_t u = 0;
            if (b > 0)
                u = (1u << (b - 1)) | (b > 1 ? r.get(b - 1) : 0u);
            out.push_back(entropy::unzigzag(u));
        }
    }
    r.finish();
    return out;
}

} // namespace dmdt::huffman
