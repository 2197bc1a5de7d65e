#pragma once

#include "wassoc/finalg.hpp"
#include "wassoc/multimap.hpp"

#include <json.hpp>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wassoc {

/// mu_t = mu + t phi_1 + .. + t^N phi_N, truncated at order N.
struct TruncatedDeformation {
    FinAlg base;
    std::vector<MultiMap> terms;  // phi_1..phi_N, bilinear

    TruncatedDeformation() = default;
    /// Throws std::invalid_argument unless every term is bilinear on base.dim().
    TruncatedDeformation(FinAlg base, std::vector<MultiMap> terms);

    int order() const { return static_cast<int>(terms.size()); }
    /// phi_0 = mu, phi_k for 1 <= k <= N, zero beyond N.
    MultiMap coefficient(int k) const;
};

/// f_t = Id + t h_1 + .. + t^N h_N.
struct GaugeTransform {
    std::vector<MultiMap> h;  // endomorphisms

    GaugeTransform() = default;
    explicit GaugeTransform(std::vector<MultiMap> h);
    static GaugeTransform identity(int dim, int order);

    int order() const { return static_cast<int>(h.size()); }
    int dim() const;
    /// Coefficients of f_t: Id, h_1, .., h_N.
    std::vector<MultiMap> series() const;
    /// Coefficients of the truncated inverse: g_0 = Id, g_n = -sum_{i=1}^n h_i g_{n-i}.
    std::vector<MultiMap> inverse_series() const;
    /// The truncated composite second o first, applied first-then-second.
    static GaugeTransform then(const GaugeTransform& first, const GaugeTransform& second);
};

/// t^k coefficient of WA_{mu_t}: sum_{i+j=k} of phi_i(X, phi_j(Y,Z)) - phi_i(phi_j(X,Y), Z)
/// composed with Phi_{v_WA}. Needs 1 <= k <= N.
MultiMap wa_defect(const TruncatedDeformation& def, int k);
/// First order k in 1..N with nonzero defect, if any.
std::optional<int> first_wa_failure(const TruncatedDeformation& def);
bool is_wa_deformation(const TruncatedDeformation& def);

/// mu'_t = f_t o mu_t o (f_t^{-1} x f_t^{-1}), truncated at order N.
TruncatedDeformation gauge(const TruncatedDeformation& def, const GaugeTransform& g);

/// Precondition failure of a deformation routine; `order` is the offending
/// order, 0 for the base itself.
class DeformationError : public std::invalid_argument {
public:
    DeformationError(const std::string& what, int order) : std::invalid_argument(what), order_(order) {}
    int order() const { return order_; }

private:
    int order_;
};

struct QuantizationReport {
    FinAlg bullet;   // the base product
    FinAlg bracket;  // phi_1(X,Y) - phi_1(Y,X)
    bool lie_admissible = false;
    bool jacobi = false;
    bool leibniz = false;
    bool poisson = false;  // is_nonassociative_poisson(bullet, bracket)
};
/// Needs a commutative WA base and N >= 2 with every defect zero; otherwise
/// throws DeformationError naming the failing order.
QuantizationReport quantization(const TruncatedDeformation& def);

struct PolarizedDeformation {
    std::vector<MultiMap> bracket_terms;  // B_k = phi_k(X,Y) - phi_k(Y,X)
    std::vector<MultiMap> bullet_terms;   // rho_k = phi_k(X,Y) + phi_k(Y,X)
};
PolarizedDeformation polarized_deformation(const TruncatedDeformation& def);

/// B1(X,Y.Z) - B1(X,Y).Z - Y.B1(X,Z) + {X,rho1(Y,Z)} - rho1({X,Y},Z) - rho1(Y,{X,Z}).
/// Needs a commutative bullet and a Lie bracket.
MultiMap ncp_defect(const FinAlg& bullet, const FinAlg& bracket, const MultiMap& rho1, const MultiMap& b1);

struct NcpReport {
    bool identity_holds = false;
    std::optional<std::vector<int>> witness;  // failing basis triple
    bool b1_lie = false;                      // skew with zero Jacobi defect
    bool rho1_jordan = false;                 // commutative Jordan product
    bool modulo_coboundary_checked = false;   // never computed
};
NcpReport ncp_report(const FinAlg& bullet, const FinAlg& bracket, const MultiMap& rho1, const MultiMap& b1);

/// {X,rho1(Y,Z)} - rho1(Y,{X,Z}) - rho1({X,Y},Z) + B1(X,Y.Z) - Y.B1(X,Z) - B1(X,Y).Z
/// for the polarization of def; zero on every WA deformation.
MultiMap polarized_leibniz_order1(const TruncatedDeformation& def);

struct BulletPreservingReport {
    std::vector<int> non_skew_orders;
    std::optional<int> non_derivation_slot;  // phi_1 fails to be a biderivation of the bullet
    bool cocycle = false;                    // delta_L^2 phi_1 = 0
    bool passes() const { return non_skew_orders.empty() && !non_derivation_slot && cocycle; }
};
/// Lichnerowicz check of phi_1 on the polarized Poisson algebra of the base.
BulletPreservingReport bullet_preserving_check(const TruncatedDeformation& def);

/// K[x,y]/m^3 deformed by phi_1 = {x,y} = x extended as a biderivation,
/// phi_k = 0 for 2 <= k <= order.
TruncatedDeformation m3_linear_quantization(int order);

/// b_0 + L + t b_1 + .. + t^N b_N with L a random Lie bracket and every b_i
/// symmetric and Leibniz-compatible with L: weakly associative at every t.
TruncatedDeformation leibniz_pencil(std::mt19937& rng, int dim, int order);
/// Gauge with entries of h_k in {-2..2}.
GaugeTransform random_gauge(std::mt19937& rng, int dim, int order);

nlohmann::json deformation_to_json(const TruncatedDeformation& def);
TruncatedDeformation deformation_from_json(const nlohmann::json& j);

}  // namespace wassoc
