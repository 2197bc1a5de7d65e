#pragma once

#include "wassoc/matrix.hpp"
#include "wassoc/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wassoc {

inline constexpr int kMaxArity = 5;

/// Permutation of {1..n}, n <= 5, stored in one-line notation.
/// images()[i-1] = sigma(i).
class Perm {
public:
    Perm() = default;
    /// One-line images, 1-based. Throws if not a bijection of 1..n.
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    /// Cycle notation: "Id", "(12)", "(234)", "(12)(34)". `n` is the arity.
    static Perm parse_cycles(std::string_view text, int n);

    int arity() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    std::vector<int> images() const;
    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    /// Cycle notation with "Id" for the identity.
    std::string cycles() const;
    /// One-line images, e.g. "231".
    std::string one_line() const;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    int n_ = 0;
    std::array<int8_t, kMaxArity> img_{};
};

/// Function composition: compose(a,b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);

/// Product of the group algebra. Matches composition of the argument
/// permutations Phi_s(X_1,..,X_n) = (X_s(1),..,X_s(n)):
/// Phi_{a*b} = Phi_a o Phi_b, i.e. a*b = compose(b, a).
Perm operator*(const Perm& a, const Perm& b);

/// All n! permutations in canonical coordinate order. For n = 3 this is
/// Id, t12, t13, t23, c, c^2 with c = (1->2->3->1); otherwise lexicographic
/// in one-line notation.
const std::vector<Perm>& all_perms(int n);
std::size_t perm_index(const Perm& p);

namespace s3 {
Perm id();
Perm t12();
Perm t13();
Perm t23();
Perm c();
Perm c2();
}  // namespace s3

/// Element of the group algebra K[S_n]. No zero coefficients are stored.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n = 3) : n_(n) {}
    GroupAlgebraElement(const Perm& p, Rational coeff = 1);
    /// Linear combination, e.g. {{s3::id(), 1}, {s3::c(), 1}, {s3::t12(), -1}}.
    GroupAlgebraElement(int n, std::initializer_list<std::pair<Perm, Rational>> terms);
    static GroupAlgebraElement from_coordinates(int n, const Vec& coords);

    int arity() const { return n_; }
    const std::map<Perm, Rational>& terms() const { return terms_; }
    Rational coeff(const Perm& p) const;
    bool is_zero() const { return terms_.empty(); }
    void add(const Perm& p, const Rational& c);

    /// Coordinates in the all_perms(n) basis.
    Vec coordinates() const;
    std::string to_string() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& v);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int n_;
    std::map<Perm, Rational> terms_;
};

/// Right translation v -> v * s (every term sigma becomes sigma * s).
GroupAlgebraElement act(const GroupAlgebraElement& v, const Perm& s);

/// The n! translates act(v, sigma), in all_perms order, duplicates kept.
std::vector<GroupAlgebraElement> orbit(const GroupAlgebraElement& v);

/// Coordinates of the orbit as matrix rows.
Matrix orbit_matrix(const GroupAlgebraElement& v);
std::size_t orbit_span_dim(const GroupAlgebraElement& v);
bool in_orbit_span(const GroupAlgebraElement& w, const GroupAlgebraElement& v);
bool relations_equivalent(const GroupAlgebraElement& v, const GroupAlgebraElement& v2);

/// v_WA = Id + c - t12.
GroupAlgebraElement v_wa();

}  // namespace wassoc
