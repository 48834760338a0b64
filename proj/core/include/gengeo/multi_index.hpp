#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gengeo {

/// Strictly increasing tuple of 0-based coordinate indices.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> indices);

    int degree() const { return static_cast<int>(idx_.size()); }
    int operator[](int k) const { return idx_[static_cast<size_t>(k)]; }
    const std::vector<int>& indices() const { return idx_; }
    bool contains(int i) const;

    /// Tuple with entry k removed.
    MultiIndex without(int k) const;
    /// Tuple with entry at position k replaced by value m; may break ordering,
    /// so callers normally go through sort_sign on the raw indices.
    std::vector<int> replaced(int k, int m) const;

    bool operator==(const MultiIndex& o) const { return idx_ == o.idx_; }
    bool operator<(const MultiIndex& o) const { return idx_ < o.idx_; }

    std::string str() const;

private:
    std::vector<int> idx_;
};

/// Sign of the permutation sorting `raw` ascending, with the sorted tuple;
/// nullopt when `raw` has a repeated index.
std::optional<std::pair<int, MultiIndex>> sort_sign(std::vector<int> raw);

/// Generalized Kronecker delta of two index tuples (any order, any repeats):
/// the determinant of the matrix of plain deltas. Values in {-1, 0, 1} for
/// tuples without repeats.
int gen_kronecker(const std::vector<int>& upper, const std::vector<int>& lower);

/// Levi-Civita symbol via gen_kronecker against (0, 1, ..., p-1).
int levi_civita(const std::vector<int>& idx);

/// All strictly increasing p-tuples over {0..n-1} in lexicographic order.
std::vector<MultiIndex> all_multi_indices(int n, int p);

/// Lexicographic rank of a strictly increasing tuple among C(n,p) of them.
int rank_of(const MultiIndex& mi, int n);
MultiIndex unrank(int n, int p, int rank);

long long binomial(int n, int k);

} // namespace gengeo
