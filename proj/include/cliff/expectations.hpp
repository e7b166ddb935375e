#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliff/duality.hpp"
#include "cliff/multivector.hpp"
#include "cliff/subspace.hpp"

namespace cliff {

/// P_u(a) = (a + u gamma(a) u / (u|u)) / 2 for a real nonzero u: the
/// tau-orthogonal projector of the algebra onto C(u-perp) along
/// u C(u-perp). The division by (u|u) recovers the unit-vector formula
/// for unnormalized u.
Multivector project_u(const CoordRow& u, const Multivector& a);

/// E_M = P_{u_m} ... P_{u_1} over a pairwise-orthogonal real basis of M:
/// the conditional expectation of the algebra onto C(M-perp). Complex
/// coefficients are handled coefficientwise by linearity.
class ExpectationOperator {
public:
    /// Builds from any real subspace; the stored basis is orthogonalized,
    /// unnormalized.
    explicit ExpectationOperator(const Subspace& m);
    /// Directly from pairwise-orthogonal real vectors.
    explicit ExpectationOperator(int ambient_dim, std::vector<CoordRow> ortho_basis);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<CoordRow>& ortho_basis() const { return ortho_basis_; }

    Multivector operator()(const Multivector& a) const;

private:
    int ambient_dim_;
    std::vector<CoordRow> ortho_basis_;
};

struct ExpectationPropertiesReport {
    bool bimodule_ok = false;        // E(b a c) = b E(a) c
    bool idempotent_ok = false;      // E(E(a)) = E(a)
    bool star_ok = false;            // E(a*) = E(a)*
    bool projectors_commute_ok = false;
    bool adjoint_ok = false;         // <P_u a | b> = <a | P_u b>
    bool orthogonal_split_ok = false;  // <a - E a | E b> = 0
    std::optional<std::string> counterexample;
    bool all_ok() const {
        return bimodule_ok && idempotent_ok && star_ok && projectors_commute_ok && adjoint_ok &&
               orthogonal_split_ok;
    }
};

/// The conditional-expectation law E(b a c) = b E(a) c and the projector
/// identities on the given samples. Samples b, c must lie in C(M)'; a is
/// arbitrary.
ExpectationPropertiesReport verify_expectation_properties(
    const ExpectationOperator& e, const std::vector<Multivector>& samples_a,
    const std::vector<std::pair<Multivector, Multivector>>& samples_bc);

struct PositivityReport {
    bool identity_ok = false;    // 2 P_u(a* a) = a* a + (gamma(a) u)* (gamma(a) u)/(u|u)
    bool trace_nonneg_ok = false;  // tau(P_u(a* a)) >= 0
    std::optional<std::string> counterexample;
    bool all_ok() const { return identity_ok && trace_nonneg_ok; }
};

PositivityReport verify_positivity_identity(const CoordRow& u, const Multivector& a);

struct StabilizationReport {
    bool stable_ok = false;      // E_M(a) = E_{X_N}(a) for every tested M
    bool fixed_point_ok = false;  // a in C(X-perp) is fixed by E_M
    int chain_length = 0;
    std::optional<std::string> counterexample;
    bool all_ok() const { return stable_ok && fixed_point_ok; }
};

/// Stabilization: with X_N the projection of N on X, E_M(a) is constant
/// for X_N <= M <= X along a chain of intermediate spaces. Requires a in
/// C(N_C) and real X, N.
StabilizationReport verify_stabilization(const Multivector& a, const Subspace& x, const Subspace& n);

struct RealDualityReport {
    bool fixed_by_expectation_ok = false;  // E_X fixes the computed C(X)'
    bool contained_in_complement_ok = false;
    bool matches_duality_ok = false;
    int dim = 0;
};

/// C(X)' = C(X-perp) for real X via the expectation retraction,
/// cross-checked against the duality module.
RealDualityReport verify_real_duality(const Subspace& x);

}  // namespace cliff
