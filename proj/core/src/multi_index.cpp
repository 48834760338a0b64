#include "gengeo/multi_index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gengeo {

MultiIndex::MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
    for (size_t k = 1; k < idx_.size(); ++k)
        if (idx_[k - 1] >= idx_[k])
            throw std::invalid_argument("multi-index must be strictly increasing");
    if (!idx_.empty() && idx_.front() < 0)
        throw std::invalid_argument("multi-index entries must be non-negative");
}

bool MultiIndex::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

MultiIndex MultiIndex::without(int k) const {
    std::vector<int> v = idx_;
    v.erase(v.begin() + k);
    return MultiIndex(std::move(v));
}

std::vector<int> MultiIndex::replaced(int k, int m) const {
    std::vector<int> v = idx_;
    v[static_cast<size_t>(k)] = m;
    return v;
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < idx_.size(); ++k) os << (k ? "," : "") << idx_[k];
    os << ")";
    return os.str();
}

std::optional<std::pair<int, MultiIndex>> sort_sign(std::vector<int> raw) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (size_t i = 1; i < raw.size(); ++i) {
        int v = raw[i];
        size_t j = i;
        while (j > 0 && raw[j - 1] > v) {
            raw[j] = raw[j - 1];
            --j;
            sign = -sign;
        }
        raw[j] = v;
    }
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i - 1] == raw[i]) return std::nullopt;
    return std::make_pair(sign, MultiIndex(std::move(raw)));
}

int gen_kronecker(const std::vector<int>& upper, const std::vector<int>& lower) {
    if (upper.size() != lower.size())
        throw std::invalid_argument("gen_kronecker needs tuples of equal length");
    auto su = sort_sign(upper);
    auto sl = sort_sign(lower);
    if (!su || !sl) return 0;
    if (!(su->second == sl->second)) return 0;
    return su->first * sl->first;
}

int levi_civita(const std::vector<int>& idx) {
    std::vector<int> ref(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) ref[i] = static_cast<int>(i);
    return gen_kronecker(ref, idx);
}

std::vector<MultiIndex> all_multi_indices(int n, int p) {
    std::vector<MultiIndex> out;
    if (p < 0 || p > n) return out;
    std::vector<int> cur(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
    for (;;) {
        out.emplace_back(cur);
        if (p == 0) break;
        int k = p - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == n - p + k) --k;
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
        for (int j = k + 1; j < p; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int rank_of(const MultiIndex& mi, int n) {
    // combinadic rank in lexicographic order
    int p = mi.degree();
    long long rank = 0;
    int prev = -1;
    for (int k = 0; k < p; ++k) {
        for (int v = prev + 1; v < mi[k]; ++v) rank += binomial(n - 1 - v, p - 1 - k);
        prev = mi[k];
    }
    return static_cast<int>(rank);
}

MultiIndex unrank(int n, int p, int rank) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p));
    int v = 0;
    long long r = rank;
    for (int k = 0; k < p; ++k) {
        for (;; ++v) {
            long long c = binomial(n - 1 - v, p - 1 - k);
            if (r < c) break;
            r -= c;
        }
        out.push_back(v);
        ++v;
    }
    return MultiIndex(std::move(out));
}

} // namespace gengeo
