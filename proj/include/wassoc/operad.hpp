#pragma once

#include "wassoc/identity.hpp"
#include "wassoc/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace wassoc {

/// Subspace of the arity-n free component (free_basis(n) coordinates),
/// stored as the nonzero rows of its reduced row-echelon form.
class RelationSpace {
public:
    RelationSpace(int arity, const std::vector<Vec>& spanning);
    static RelationSpace from_identities(int arity, const std::vector<MultilinearIdentity>& gens);
    /// Span of all S_n relabellings of the generators.
    static RelationSpace sigma_closure(int arity, const std::vector<MultilinearIdentity>& gens);

    int arity() const { return arity_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return free_basis(arity_).size(); }
    std::size_t quotient_dim() const { return ambient_dim() - dim(); }
    const std::vector<Vec>& basis() const { return basis_; }
    std::vector<MultilinearIdentity> identities() const;
    bool contains(const MultilinearIdentity& e) const;
    friend bool operator==(const RelationSpace& a, const RelationSpace& b) { return a.arity_ == b.arity_ && a.basis_ == b.basis_; }

private:
    int arity_;
    std::vector<Vec> basis_;
};

/// S_3-span of the WA relation (x1x2)x3 - x1(x2x3) + (x2x3)x1 - ...
RelationSpace wa_relation_space();
RelationSpace associative_relation_space();
RelationSpace free_relation_space(int arity);

/// Arity-4 operadic ideal generated by an arity-3 relation space: every
/// relation with a product substituted into one argument, every relation
/// multiplied by a fourth slot on either side, closed under S_4.
RelationSpace consequences(const RelationSpace& r);

/// Pairing on the arity-3 free component: a left comb with word s pairs with
/// itself to sign(s), a right comb to -sign(s), everything else to 0.
Rational dual_pairing(const MultilinearIdentity& u, const MultilinearIdentity& w);
Matrix pairing_gram();
RelationSpace annihilator(const RelationSpace& r);

/// Arity-4 component of the dual operad inside the 24 associative words
/// x_{s1}x_{s2}x_{s3}x_{s4} (coordinates indexed by all_perms(4)).
struct DualArity4 {
    Matrix relations;       // every placement of R3, one row each
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::vector<Vec> kernel;
    Matrix reduced_family;  // only R3(., ..,.) and .R3(.,.,.)
    std::size_t reduced_rank = 0;
};
DualArity4 wass_dual_arity4();
std::size_t wass_dual_arity4_dim();

/// Associative word polynomial: words in letter labels with coefficients.
using WordPoly = std::map<std::vector<int>, Rational>;
WordPoly letter(int label);
WordPoly word_product(const WordPoly& a, const WordPoly& b);
WordPoly word_sum(const WordPoly& a, const WordPoly& b, const Rational& s = 1);
/// abc + cba - acb - bca.
WordPoly r3(const WordPoly& a, const WordPoly& b, const WordPoly& c);
/// Coordinates of a multilinear arity-4 word polynomial in all_perms(4) order.
Vec word_coordinates(const WordPoly& p);

struct NamedCheck {
    std::string name;
    bool holds = false;
};
/// The R3 syzygies used to reduce the arity-4 computation, each checked in
/// the free associative algebra.
std::vector<NamedCheck> dual_relation_identities();

/// Coefficients c_0..c_order of sum_n (-1)^n dims[n-1] x^n / n!.
std::vector<Rational> generating_function(const std::vector<long>& dims, int order);
/// Truncated composition f(g(x)); both series need c_0 = 0.
std::vector<Rational> compose_series(const std::vector<Rational>& f, const std::vector<Rational>& g, int order);
/// Coefficients of f(g(x)) - x through the given order.
std::vector<Rational> koszul_composition_check(const std::vector<Rational>& f, const std::vector<Rational>& g, int order);

}  // namespace wassoc
