#include "cobcalc/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cobcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    size_t n = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < o.parts_.size() ? o.parts_[i] : 0;
        if (a != b) return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        enumerate_rec(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(n, n, stack, out);
    if (n == 0) out.assign(1, Partition());
    return out;
}

Partition partition_union(const Partition& mu, const Partition& nu) {
    std::vector<int> parts = mu.parts();
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition(std::move(parts));
}

std::vector<std::pair<Partition, Partition>> m_splittings(const Partition& lambda) {
    // distinct part values with multiplicities, descending
    std::vector<std::pair<int, int>> groups;
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }

    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> mu, nu;
    std::function<void(size_t)> rec = [&](size_t g) {
        if (g == groups.size()) {
            out.emplace_back(Partition(mu), Partition(nu));
            return;
        }
        auto [value, mult] = groups[g];
        for (int take = 0; take <= mult; ++take) {
            mu.insert(mu.end(), take, value);
            nu.insert(nu.end(), mult - take, value);
            rec(g + 1);
            mu.resize(mu.size() - take);
            nu.resize(nu.size() - (mult - take));
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Partition parse_partition(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("malformed partition '" + std::string(s) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        std::string token(body.substr(pos, comma - pos));
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition part '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("malformed partition part '" + token + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace cobcalc
