#include "critlab/graph6.hpp"

#include "critlab/errors.hpp"

namespace critlab {

namespace {

constexpr int kBias = 63;
constexpr int kLongMarker = 126;

int payload_value(std::string_view text, std::size_t pos)
{
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kLongMarker) throw DecodeError("byte outside graph6 range 63..126", pos);
    return c - kBias;
}

} // namespace

Graph graph6_decode(std::string_view text)
{
    if (text.empty()) throw DecodeError("empty graph6 string", 0);
    if (text.front() == '>') throw DecodeError("'>>graph6<<' headers are not accepted", 0);

    std::size_t pos = 0;
    int n = 0;
    if (static_cast<unsigned char>(text[0]) != kLongMarker) {
        n = payload_value(text, 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongMarker)
            throw DecodeError("vertex count exceeds 64", 1);
        if (text.size() < 4) throw DecodeError("truncated vertex-count header", text.size());
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | payload_value(text, i);
        if (n < 63) throw DecodeError("non-shortest vertex-count header", 0);
        pos = 4;
    }
    if (n > kMaxVertices) throw DecodeError("vertex count exceeds 64", 0);

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() != pos + byte_count) {
        const std::size_t at = text.size() < pos + byte_count ? text.size() : pos + byte_count;
        throw DecodeError("payload length does not match vertex count", at);
    }

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int value = payload_value(text, pos + k / 6);
            if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bit_count % 6 != 0) {
        const std::size_t last = pos + byte_count - 1;
        const int pad_mask = (1 << (6 - bit_count % 6)) - 1;
        if (payload_value(text, last) & pad_mask) throw DecodeError("nonzero padding bits", last);
    }
    // Bytes that contribute no bits still need range checks.
    for (std::size_t i = pos; i < text.size(); ++i) payload_value(text, i);
    return g;
}

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongMarker));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

} // namespace critlab
