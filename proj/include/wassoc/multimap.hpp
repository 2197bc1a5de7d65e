#pragma once

#include "wassoc/rational.hpp"
#include "wassoc/symgroup.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wassoc {

/// k-linear map A^{x k} -> A on an n-dimensional space, stored as a dense
/// coefficient tensor t[i1..ik][out] with 0-based indices.
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(int arity, int dim);
    /// Endomorphism from a square matrix given row-major as rows[out][in].
    static MultiMap endomorphism(const std::vector<Vec>& rows);
    static MultiMap identity(int dim);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    /// Number of input tuples, dim^arity.
    std::size_t tuples() const { return tuples_; }

    std::span<Rational> value(std::span<const int> idx);
    std::span<const Rational> value(std::span<const int> idx) const;
    std::span<Rational> value_at(std::size_t tuple);
    std::span<const Rational> value_at(std::size_t tuple) const;
    Rational& at(std::span<const int> idx, int out) { return value(idx)[static_cast<std::size_t>(out)]; }
    const Rational& at(std::span<const int> idx, int out) const { return value(idx)[static_cast<std::size_t>(out)]; }
    std::vector<int> decode(std::size_t tuple) const;

    /// Multilinear evaluation on arbitrary vectors.
    Vec apply(std::span<const Vec> args) const;
    Vec operator()(const Vec& x) const;
    Vec operator()(const Vec& x, const Vec& y) const;

    bool is_zero() const;
    bool is_skew() const;
    bool is_symmetric() const;
    /// First input tuple (0-based) with nonzero value, if any.
    std::optional<std::vector<int>> first_nonzero() const;

    /// (this o Phi_s)(X1..Xk) = this(X_s(1), .., X_s(k)).
    MultiMap permuted(const Perm& s) const;
    /// this o Phi_v for v in the group algebra of the arity.
    MultiMap permuted(const GroupAlgebraElement& v) const;
    /// Bilinear only: phi(X,Y) - phi(Y,X) and phi(X,Y) + phi(Y,X).
    MultiMap skew_part() const;
    MultiMap sym_part() const;

    /// Composition with endomorphisms: out o this o (ins[0] x .. x ins[k-1]).
    MultiMap conjugated(const MultiMap& out, std::span<const MultiMap> ins) const;
    /// Endomorphism composition this o g (both arity 1).
    MultiMap after(const MultiMap& g) const;

    MultiMap& operator+=(const MultiMap& o);
    MultiMap& operator-=(const MultiMap& o);
    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
    friend MultiMap operator*(const Rational& s, MultiMap m);
    friend bool operator==(const MultiMap&, const MultiMap&) = default;

    const std::vector<Rational>& data() const { return t_; }

    /// Builds a tensor by evaluating f on every 0-based index tuple. Tuples are
    /// distributed over OpenMP threads; f must be safe to call concurrently.
    static MultiMap tabulate(int arity, int dim, const std::function<Vec(std::span<const int>)>& f);

private:
    void check_same_shape(const MultiMap& o) const;

    int arity_ = 0;
    int dim_ = 0;
    std::size_t tuples_ = 1;
    std::vector<Rational> t_;
};

/// Bases of symmetric / skew / all bilinear maps on a dim-dimensional space.
std::vector<MultiMap> symmetric_bilinear_basis(int dim);
std::vector<MultiMap> skew_bilinear_basis(int dim);
std::vector<MultiMap> bilinear_basis(int dim);

/// Basis of the solutions of f(x) = 0 for x in the span of gens, f linear.
std::vector<MultiMap> solve_linear(const std::vector<MultiMap>& gens,
                                   const std::function<MultiMap(const MultiMap&)>& f);

/// sum_i coeffs[i] * maps[i].
MultiMap combine(const std::vector<MultiMap>& maps, const Vec& coeffs);

namespace reference {

/// Single-threaded MultiMap::tabulate.
MultiMap tabulate_serial(int arity, int dim, const std::function<Vec(std::span<const int>)>& f);

}  // namespace reference

}  // namespace wassoc
