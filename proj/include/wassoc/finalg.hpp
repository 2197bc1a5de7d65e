#pragma once

#include "wassoc/identity.hpp"
#include "wassoc/multimap.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wassoc {

/// Finite-dimensional algebra e_i e_j = sum_k c[i][j][k] e_k over the
/// rationals. Indices are 0-based in the API and 1-based in JSON.
class FinAlg {
public:
    FinAlg() = default;
    explicit FinAlg(int dim) : c_(2, dim) {}
    explicit FinAlg(MultiMap product);

    int dim() const { return c_.dim(); }
    const MultiMap& product() const { return c_; }

    void set(int i, int j, const Vec& value);
    void set(int i, int j, int k, const Rational& c);
    Rational coeff(int i, int j, int k) const;
    std::span<const Rational> basis_product(int i, int j) const;

    Vec mul(const Vec& x, const Vec& y) const { return c_(x, y); }
    Vec basis(int i) const { return unit_vec(static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }

    FinAlg& operator+=(const FinAlg& o);
    friend FinAlg operator+(FinAlg a, const FinAlg& b) { return a += b; }
    friend FinAlg operator*(const Rational& s, const FinAlg& a) { return FinAlg(s * a.c_); }
    friend bool operator==(const FinAlg&, const FinAlg&) = default;

private:
    MultiMap c_;
};

/// Substitutes the algebra's product at every kMu node and `formal` (if
/// given) at every kPhi node, tabulated over basis tuples.
MultiMap evaluate(const FinAlg& alg, const MultilinearIdentity& e, const MultiMap* formal = nullptr);

/// A basis tuple (0-based) on which an identity fails, with the value there.
struct Witness {
    std::vector<int> indices;
    Vec value;
    std::string to_string() const;  // "(e1,e1,e2) -> (0, 2)"
};

/// First failing basis tuple of evaluate(alg, e), if any.
std::optional<Witness> find_violation(const FinAlg& alg, const MultilinearIdentity& e);

bool satisfies(const FinAlg& alg, const MultilinearIdentity& e);
bool is_weakly_associative(const FinAlg& alg);
bool is_associative(const FinAlg& alg);
bool is_flexible(const FinAlg& alg);
bool is_lie_admissible(const FinAlg& alg);
bool is_commutative(const FinAlg& alg);
bool is_anticommutative(const FinAlg& alg);
bool satisfies_jacobi(const FinAlg& alg);
/// Flexible and A(X, Y, X X) = 0, tested through the full linearisation
/// in X. For commutative products this is the usual Jordan identity.
bool is_jordan(const FinAlg& alg);

struct Polarization {
    FinAlg bullet;   // X*Y + Y*X
    FinAlg bracket;  // X*Y - Y*X
};
Polarization polarize(const FinAlg& alg);
/// bullet + bracket. Throws std::invalid_argument naming the first basis
/// pair that breaks (anti)commutativity.
FinAlg depolarize(const FinAlg& bullet, const FinAlg& bracket);

/// {X.Y, Z} - X.{Y,Z} - {X,Z}.Y on basis triples.
MultiMap poisson_leibniz_defect(const FinAlg& bullet, const FinAlg& bracket);
bool is_nonassociative_poisson(const FinAlg& bullet, const FinAlg& bracket);

/// f(X)Y + X f(Y) = f(XY) on basis pairs; f is an endomorphism (arity 1).
bool is_derivation(const FinAlg& alg, const MultiMap& f);
/// L_X - R_X.
MultiMap inner_commutator(const FinAlg& alg, const Vec& x);

FinAlg algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FinAlg& alg);
/// Nested arrays t[i1]..[ik][out] of "p/q" strings.
nlohmann::json multimap_to_json(const MultiMap& m);
MultiMap multimap_from_json(const nlohmann::json& j, int arity, int dim);

}  // namespace wassoc
