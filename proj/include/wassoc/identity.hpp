#pragma once

#include "wassoc/rational.hpp"
#include "wassoc/symgroup.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wassoc {

/// Labelled planar binary tree in prefix order: kMu / kPhi for internal
/// nodes, positive entries are leaf labels. ((x1x2)x3) is {kMu,kMu,1,2,3}.
using TreeCode = std::vector<int8_t>;
inline constexpr int8_t kMu = -1;   // the algebra product
inline constexpr int8_t kPhi = -2;  // a second, formal binary operation

/// Unlabelled planar binary tree: prefix string over 'm' (product), 'f'
/// (formal operation) and '.' (leaf).
struct TreeShape {
    std::string code;

    int leaves() const;
    std::string to_string() const;  // "((..).)" style
    friend auto operator<=>(const TreeShape&, const TreeShape&) = default;
};

/// Product-only shapes with n leaves, left comb first:
/// n=3: ((..).), (.(..)).
const std::vector<TreeShape>& tree_shapes(int n);

/// A basis element of the free operad: tree shape + leaf labelling in
/// left-to-right order (the word, read as a permutation in one-line form).
struct Monomial {
    TreeShape shape;
    Perm word;

    TreeCode code() const;
    static Monomial from_code(const TreeCode& code);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Linear combination of labelled trees. Identities used as relations are
/// multilinear (labels exactly 1..n), intermediate expressions need not be.
class MultilinearIdentity {
public:
    MultilinearIdentity() = default;
    static MultilinearIdentity leaf(int label);
    static MultilinearIdentity term(const TreeCode& code, const Rational& c = 1);
    static MultilinearIdentity term(const Monomial& m, const Rational& c = 1);

    /// Number of leaves of the terms (0 for the zero identity).
    int arity() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_multilinear() const;
    const std::map<TreeCode, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const TreeCode& code) const;
    Rational coeff(const Monomial& m) const { return coeff(m.code()); }

    void add(const TreeCode& code, const Rational& c);
    MultilinearIdentity& operator+=(const MultilinearIdentity& o);
    MultilinearIdentity& operator-=(const MultilinearIdentity& o);
    friend MultilinearIdentity operator+(MultilinearIdentity a, const MultilinearIdentity& b) { return a += b; }
    friend MultilinearIdentity operator-(MultilinearIdentity a, const MultilinearIdentity& b) { return a -= b; }
    friend MultilinearIdentity operator*(const Rational& s, const MultilinearIdentity& e);
    friend bool operator==(const MultilinearIdentity&, const MultilinearIdentity&) = default;

    /// Leaf label i becomes mapping[i] (mapping indexed by label, entry 0 unused).
    MultilinearIdentity relabel(const std::vector<int>& mapping) const;

    /// "(x1x2)x3 - x1(x2x3)"; the formal operation prints as f(a,b).
    std::string to_string() const;

private:
    std::map<TreeCode, Rational> terms_;
};

/// Bilinear tree constructors.
MultilinearIdentity mu(const MultilinearIdentity& a, const MultilinearIdentity& b);
MultilinearIdentity phi(const MultilinearIdentity& a, const MultilinearIdentity& b);

/// Replace every leaf labelled `label` by `f` (linear in f).
MultilinearIdentity substitute(const MultilinearIdentity& e, int label, const MultilinearIdentity& f);

/// Simultaneous substitution x_i -> args[i-1]; args must use fresh labels.
MultilinearIdentity compose(const MultilinearIdentity& e, const std::vector<MultilinearIdentity>& args);

/// e o Phi_v: each term's labels are sent through sigma (word pi becomes
/// sigma o pi), weighted by v's coefficients.
MultilinearIdentity apply_group_vector(const MultilinearIdentity& e, const GroupAlgebraElement& v);

/// x1(x2x3) - (x1x2)x3.
MultilinearIdentity associator();
/// associator o Phi_{v_WA}: A(x,y,z) + A(y,z,x) - A(y,x,z).
MultilinearIdentity wa_expression();
/// associator o Phi_W, W = Id - t12 - t13 - t23 + c + c^2.
MultilinearIdentity lie_admissible_expression();
/// associator o Phi_{Id + t13}: A(x,y,z) + A(z,y,x).
MultilinearIdentity flexible_expression();
/// associator o Phi_w, w = Id + t12 + t13 - t23 - c + c^2. Equals minus the
/// Leibniz defect of the polarised pair.
MultilinearIdentity leibniz_expression();
/// Full linearisation in x of A(x, y, x x): sum over S3 of
/// A(x_s1, x4, x_s2 x_s3), arity 4 (x4 plays y).
MultilinearIdentity jordan_expression();
/// x1(x2x3) + x2(x3x1) + x3(x1x2) for a product assumed skew.
MultilinearIdentity jacobi_expression();

GroupAlgebraElement lie_admissible_vector();
GroupAlgebraElement leibniz_vector();

/// Basis of the arity-n component of the free operad generated by the
/// product and `formal_ops` copies of the formal operation (0 or 1), as
/// labelled trees in canonical order: labelled shapes, then words in
/// all_perms order.
const std::vector<TreeCode>& free_basis(int n, int formal_ops = 0);
/// Coordinates of e in free_basis(e.arity(), formal_ops). Throws if e has a
/// term outside that basis.
Vec coordinates(const MultilinearIdentity& e, int formal_ops = 0);
MultilinearIdentity from_coordinates(int n, const Vec& coords, int formal_ops = 0);

}  // namespace wassoc
