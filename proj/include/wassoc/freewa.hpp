#pragma once

#include "wassoc/finalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wassoc {

/// d_0..d_max from d_0 = d_1 = 1, d_{2p+1} = sum_{k=1..p} d_k d_{2p+1-k},
/// d_{2p} = sum_{k=1..p-1} d_k d_{2p-k} + d_p (d_p + 1) / 2.
std::vector<long> free_wa_dimensions(int max_degree);

/// Brute-force oracle: every unordered binary tree with n leaves as a
/// canonical string ("X", "(X,X)", ...), built without FreeWA.
std::vector<std::string> enumerate_unordered_trees(int leaves);

/// The free weakly associative algebra on one generator X, truncated at a
/// maximal degree: the free commutative magma algebra with a unit. Labels
/// are integer ids, ordered by degree and, inside a degree, by the pair
/// (smaller factor, larger factor).
class FreeWA {
public:
    explicit FreeWA(int max_degree);

    static constexpr int kUnit = 0;
    static constexpr int kGenerator = 1;

    int max_degree() const { return max_degree_; }
    std::size_t size() const { return nodes_.size(); }
    /// Ids of degree d, in canonical order.
    const std::vector<int>& elements(int degree) const;
    int degree(int id) const;
    /// The unordered factor pair of a label of degree >= 2.
    std::pair<int, int> factors(int id) const;

    /// "1", "X", "X^3", "X^4_1", ...: subscripts count inside the degree.
    std::string name(int id) const;
    /// Nested tree form, e.g. "(X,(X,X))".
    std::string tree(int id) const;
    std::optional<int> find(const std::string& name) const;

    /// Product label, or nothing when the degree would exceed max_degree.
    std::optional<int> try_multiply(int u, int v) const;
    /// Throws std::out_of_range on degree overflow.
    int multiply(int u, int v) const;

    /// Structure constants on every label; products above max_degree are 0.
    FinAlg as_truncated_algebra() const;

private:
    struct Node {
        int degree;
        int left;
        int right;
    };
    void check_id(int id) const;

    int max_degree_;
    std::vector<Node> nodes_;
    std::vector<std::vector<int>> by_degree_;
    std::map<std::pair<int, int>, int> pairs_;
};

}  // namespace wassoc
