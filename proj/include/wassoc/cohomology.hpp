#pragma once

#include "wassoc/finalg.hpp"
#include "wassoc/identity.hpp"
#include "wassoc/matrix.hpp"
#include "wassoc/multimap.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wassoc {

/// Algebra on which cochains live. A Poisson context also carries a
/// commutative bullet and a bracket linked by the Leibniz identity.
class CochainContext {
public:
    explicit CochainContext(FinAlg alg) : alg_(std::move(alg)) {}
    /// Throws std::invalid_argument unless (bullet, bracket) is nonassociative Poisson.
    static CochainContext poisson(const FinAlg& bullet, const FinAlg& bracket);

    const FinAlg& alg() const { return alg_; }
    int dim() const { return alg_.dim(); }
    bool has_poisson() const { return bracket_.has_value(); }
    const FinAlg& bullet() const;
    const FinAlg& bracket() const;

private:
    FinAlg alg_;
    std::optional<FinAlg> bullet_;
    std::optional<FinAlg> bracket_;
};

/// Invalid cochain input; `argument` is the 1-based slot at fault, 0 if none.
class CochainError : public std::invalid_argument {
public:
    CochainError(const std::string& what, int argument) : std::invalid_argument(what), argument_(argument) {}
    int argument() const { return argument_; }

private:
    int argument_;
};

/// X1 phi(X2..) + sum_{i=1..k} (-1)^i phi(.., X_i X_{i+1}, ..) + (-1)^{k+1} phi(X1..Xk) X_{k+1}.
MultiMap hochschild_delta(const CochainContext& ctx, const MultiMap& phi);

/// L_X - R_X.
MultiMap wa_delta0(const CochainContext& ctx, const Vec& x);
/// f(X)Y + X f(Y) - f(XY).
MultiMap wa_delta1(const CochainContext& ctx, const MultiMap& f);
/// delta_H^2 phi o Phi_{v_WA}.
MultiMap wa_delta2(const CochainContext& ctx, const MultiMap& phi);
/// psi(XY,Z) - X psi(Y,Z) - psi(X,Z) Y.
MultiMap leibniz_defect(const CochainContext& ctx, const MultiMap& psi);
bool wa_cocycle2(const CochainContext& ctx, const MultiMap& phi);

/// First slot (1-based) in which the skew cochain fails to be a derivation of
/// the bullet product, if any. Arity-0 cochains (elements) always pass.
std::optional<int> multiderivation_failure(const FinAlg& bullet, const MultiMap& cochain);
bool is_multiderivation(const FinAlg& bullet, const MultiMap& cochain);

/// Basis of the skew-symmetric k-linear maps (all endomorphisms for k = 1).
std::vector<MultiMap> skew_cochain_basis(int arity, int dim);
/// Basis of the skew k-linear maps that are derivations in every argument.
std::vector<MultiMap> multiderivation_basis(const FinAlg& bullet, int arity);

/// sum_i (-1)^i {X_i, Phi(..^i..)} + sum_{i<j} (-1)^{i+j} Phi({X_i,X_j}, ..^i..^j..)
/// on X_0..X_k. Phi must be skew and a multiderivation of the bullet;
/// arity 0 stands for an element. Throws CochainError otherwise.
MultiMap lichnerowicz_delta(const CochainContext& ctx, const MultiMap& cochain);

/// w1 = Id + t12 - t23 - c: 3-cochains satisfy Psi o Phi_{w1} = 0.
GroupAlgebraElement cochain3_vector();
bool operadic_cochain3_check(const MultiMap& psi);
/// v4 = Id + (14) - (234) - (1432) and v4' = Id + (24) - (34) - (243).
std::vector<GroupAlgebraElement> cochain4_vectors();
bool operadic_cochain4_check(const MultiMap& theta);
/// Basis of {u : u * v = 0 for both 4-cochain vectors}; Theta o Phi_u then
/// passes operadic_cochain4_check for every 4-linear Theta.
std::vector<GroupAlgebraElement> cochain4_projectors();

/// The degree-3 ansatz: one unknown per (family, sigma), families a..e over
/// S_4 in all_perms order.
///   a: X_s1 phi3(X_s2, X_s3, X_s4)      b: phi3(X_s1, X_s2, X_s3) X_s4
///   c: phi3(X_s1 X_s2, X_s3, X_s4)      d: phi3(X_s1, X_s2 X_s3, X_s4)
///   e: phi3(X_s1, X_s2, X_s3 X_s4)
inline constexpr int kDelta3Families = 5;
inline constexpr int kDelta3Unknowns = kDelta3Families * 24;
std::string delta3_unknown_label(int index);

/// Symbolic delta3 o delta2 phi2 for one unknown, as an arity-4 tree
/// expression with one formal operation (phi2).
MultilinearIdentity delta3_term(int unknown);

struct Delta3System {
    Matrix raw;                       // 360 x 120, columns = unknowns
    std::vector<std::string> unknowns;
    std::size_t raw_rows = 0;         // equations before deduplication
    std::size_t distinct_rows = 0;    // distinct nonzero rows
    std::size_t ideal_dim = 0;        // WA consequences with one formal operation
    Matrix matrix;                    // reduced modulo the ideal; kernel = solutions
    std::vector<Vec> kernel;
    std::size_t raw_kernel_dim = 0;   // solutions already zero in the free operad
};
Delta3System delta3_system();

/// The WA consequences in free_basis(4, 1): the relation with phi2 in one
/// argument, or as an argument of phi2, closed under S_4.
std::vector<Vec> delta3_ideal();

/// The 120 terms of the ansatz evaluated on a concrete 3-cochain.
std::vector<MultiMap> delta3_terms(const CochainContext& ctx, const MultiMap& phi3);
MultiMap wa_delta3(const CochainContext& ctx, const MultiMap& phi3, const Vec& coeffs);
/// For each coefficient vector, whether delta3(delta2 phi2) vanishes.
std::vector<bool> delta3_annihilates(const CochainContext& ctx, const MultiMap& phi2, const std::vector<Vec>& coeffs);

}  // namespace wassoc
