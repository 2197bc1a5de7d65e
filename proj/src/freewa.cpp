#include "wassoc/freewa.hpp"

#include <set>
#include <stdexcept>

namespace wassoc {

std::vector<long> free_wa_dimensions(int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("free_wa_dimensions: negative degree");
    std::vector<long> d(static_cast<std::size_t>(max_degree) + 1, 0);
    d[0] = 1;
    if (max_degree >= 1)
        d[1] = 1;
    for (int n = 2; n <= max_degree; ++n) {
        const int p = n / 2;
        long s = 0;
        if (n % 2 == 1) {
            for (int k = 1; k <= p; ++k)
                s += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
        } else {
            for (int k = 1; k <= p - 1; ++k)
                s += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
            const long dp = d[static_cast<std::size_t>(p)];
            s += dp * (dp + 1) / 2;
        }
        d[static_cast<std::size_t>(n)] = s;
    }
    return d;
}

std::vector<std::string> enumerate_unordered_trees(int leaves)
{
    if (leaves < 1)
        throw std::invalid_argument("enumerate_unordered_trees: needs at least one leaf");
    std::vector<std::vector<std::string>> t(static_cast<std::size_t>(leaves) + 1);
    t[1] = {"X"};
    for (int n = 2; n <= leaves; ++n) {
        std::set<std::string> s;
        for (int p = 1; p < n; ++p)
            for (const auto& a : t[static_cast<std::size_t>(p)])
                for (const auto& b : t[static_cast<std::size_t>(n - p)])
                    s.insert("(" + std::min(a, b) + "," + std::max(a, b) + ")");
        t[static_cast<std::size_t>(n)].assign(s.begin(), s.end());
    }
    return t[static_cast<std::size_t>(leaves)];
}

FreeWA::FreeWA(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("FreeWA: negative maximal degree");
    by_degree_.resize(static_cast<std::size_t>(max_degree) + 1);
    nodes_.push_back({0, -1, -1});
    by_degree_[0].push_back(kUnit);
    if (max_degree >= 1) {
        nodes_.push_back({1, -1, -1});
        by_degree_[1].push_back(kGenerator);
    }
    for (int d = 2; d <= max_degree; ++d)
        for (int p = 1; 2 * p <= d; ++p)
            for (int u : by_degree_[static_cast<std::size_t>(p)])
                for (int v : by_degree_[static_cast<std::size_t>(d - p)]) {
                    if (p == d - p && v < u)
                        continue;
                    const int id = static_cast<int>(nodes_.size());
                    nodes_.push_back({d, u, v});
                    by_degree_[static_cast<std::size_t>(d)].push_back(id);
                    pairs_[{u, v}] = id;
                }
}

void FreeWA::check_id(int id) const
{
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size())
        throw std::out_of_range("FreeWA: unknown label id " + std::to_string(id));
}

const std::vector<int>& FreeWA::elements(int degree) const
{
    if (degree < 0 || degree > max_degree_)
        throw std::out_of_range("FreeWA: degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_degree_));
    return by_degree_[static_cast<std::size_t>(degree)];
}

int FreeWA::degree(int id) const
{
    check_id(id);
    return nodes_[static_cast<std::size_t>(id)].degree;
}

std::pair<int, int> FreeWA::factors(int id) const
{
    check_id(id);
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.degree < 2)
        throw std::invalid_argument("FreeWA: the unit and the generator have no factors");
    return {n.left, n.right};
}

std::string FreeWA::name(int id) const
{
    check_id(id);
    const int d = degree(id);
    if (d == 0)
        return "1";
    if (d == 1)
        return "X";
    const auto& same = by_degree_[static_cast<std::size_t>(d)];
    std::string s = "X^" + std::to_string(d);
    if (same.size() > 1)
        s += "_" + std::to_string(id - same.front() + 1);
    return s;
}

std::string FreeWA::tree(int id) const
{
    check_id(id);
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.degree == 0)
        return "1";
    if (n.degree == 1)
        return "X";
    return "(" + tree(n.left) + "," + tree(n.right) + ")";
}

std::optional<int> FreeWA::find(const std::string& label) const
{
    for (std::size_t id = 0; id < nodes_.size(); ++id)
        if (name(static_cast<int>(id)) == label)
            return static_cast<int>(id);
    return std::nullopt;
}

std::optional<int> FreeWA::try_multiply(int u, int v) const
{
    check_id(u);
    check_id(v);
    if (u == kUnit)
        return v;
    if (v == kUnit)
        return u;
    if (degree(u) + degree(v) > max_degree_)
        return std::nullopt;
    return pairs_.at({std::min(u, v), std::max(u, v)});
}

int FreeWA::multiply(int u, int v) const
{
    if (auto p = try_multiply(u, v))
        return *p;
    throw std::out_of_range("FreeWA: product " + name(u) + " * " + name(v) + " exceeds degree " +
                            std::to_string(max_degree_));
}

FinAlg FreeWA::as_truncated_algebra() const
{
    const int n = static_cast<int>(nodes_.size());
    FinAlg alg(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (auto p = try_multiply(u, v))
                alg.set(u, v, *p, 1);
    return alg;
}

}  // namespace wassoc
