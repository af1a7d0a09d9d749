#pragma once

namespace nlbif {

/// Constants of the unique positive solution W_p of  -W'' = W^p,  W(0) = W(1) = 0.
///
/// L_p = ∫₀¹ ds / √(1 - s^{p+1})   (half-period time map)
/// M_p = ∫₀¹ s^p / √(1 - s^{p+1})  (= 2/(p+1))
/// xi  = max W_p = W_p(1/2) = (2(p+1))^{1/(p-1)} L_p^{2/(p-1)}
/// norm_p = ‖W_p‖_p = (2(p+1))^{1/(p-1)} M_p^{1/p} L_p^{(p+1)/(p(p-1))}
struct GroundState {
    double p = 0.0;
    double L_p = 0.0;
    double M_p = 0.0;
    double xi = 0.0;
    double norm_p = 0.0;
};

/// L_p by adaptive quadrature after the endpoint substitution s = 1 - u².
/// Defined for p >= 1 (L_1 = π/2); throws InvalidParameter for p < 1.
double compute_Lp(double p);

/// Beta-function route for L_p: B(1/(p+1), 1/2) / (p+1).
double compute_Lp_closed_form(double p);

/// M_p = 2/(p+1). Throws InvalidParameter for p < 1.
double compute_Mp(double p);

/// M_p by quadrature of its defining integral (independent of compute_Mp).
double compute_Mp_quadrature(double p);

/// ∫₀^σ ds / √(1 - s^{p+1}) for σ in [0, 1].
double time_map_partial(double p, double sigma);

/// ∫_{1-v²}^1 ds / √(1 - s^{p+1}) = ∫₀^v 2u / √(1 - (1-u²)^{p+1}) du, v in [0, 1].
/// Bounded integrand; used near the maximum of W_p where σ = 1 - v² is ill-conditioned.
double time_map_tail(double p, double v);

/// Requires p > 1; p = 1 has no ground state of this form and is handled analytically.
GroundState build_ground_state(double p);

}  // namespace nlbif
