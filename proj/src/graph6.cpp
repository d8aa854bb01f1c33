#include "indpoly/graph6.hpp"

#include <stdexcept>

namespace indpoly {

namespace {

constexpr long long kMaxOrder = 258047;  // three 6-bit groups

long long body_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    // tolerate the conventional file prefix
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (record.substr(0, kPrefix.size()) == kPrefix) record.remove_prefix(kPrefix.size());
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
        record.remove_suffix(1);

    if (record.empty()) throw std::invalid_argument("graph6: empty record");
    for (unsigned char c : record)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: non-printable byte " + std::to_string(int(c)));

    size_t pos = 0;
    long long n;
    if (record[0] != '~') {
        n = record[0] - 63;
        pos = 1;
    } else {
        if (record.size() >= 2 && record[1] == '~')
            throw std::invalid_argument("graph6: orders above 258047 are not supported");
        if (record.size() < 4) throw std::invalid_argument("graph6: malformed header");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (record[i] - 63);
        if (n > kMaxOrder) throw std::invalid_argument("graph6: malformed header");
        pos = 4;
    }

    const long long need = body_bytes(n);
    const long long have = static_cast<long long>(record.size()) - static_cast<long long>(pos);
    if (have < need) throw std::invalid_argument("graph6: truncated bit vector");
    if (have > need) throw std::invalid_argument("graph6: trailing bytes after bit vector");

    Graph g{int(n)};
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = record[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    long long n = g.n();
    if (n > kMaxOrder) throw std::invalid_argument("graph6: order too large to encode");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    long long nb = body_bytes(n);
    std::string body(size_t(nb), char(0));
    long long bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.adjacent(row, col)) body[size_t(bit / 6)] |= char(1 << (5 - bit % 6));
    for (char& c : body) c = char(c + 63);
    out += body;
    return out;
}

}  // namespace indpoly
