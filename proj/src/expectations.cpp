#include "cliff/expectations.hpp"

#include <stdexcept>

namespace cliff {

Multivector project_u(const CoordRow& u, const Multivector& a) {
    if (static_cast<int>(u.size()) != a.dim())
        throw std::invalid_argument("project_u: dimension mismatch");
    GaussianRational uu;
    for (const auto& v : u) {
        if (!v.is_real()) throw std::invalid_argument("project_u: non-real vector");
        uu += v * v;
    }
    if (uu.is_zero()) throw std::domain_error("project_u: zero or isotropic vector");
    const Multivector u_mv = Multivector::vector(u);
    const GaussianRational half(Rational(1, 2));
    return (a + u_mv * a.gamma() * u_mv * uu.inv()) * half;
}

ExpectationOperator::ExpectationOperator(const Subspace& m)
    : ambient_dim_(m.ambient_dim()), ortho_basis_(orthogonalize(m)) {}

ExpectationOperator::ExpectationOperator(int ambient_dim, std::vector<CoordRow> ortho_basis)
    : ambient_dim_(ambient_dim), ortho_basis_(std::move(ortho_basis)) {
    for (size_t i = 0; i < ortho_basis_.size(); ++i)
        for (size_t j = i + 1; j < ortho_basis_.size(); ++j)
            if (!bilinear_form(std::span<const GaussianRational>(ortho_basis_[i]),
                               std::span<const GaussianRational>(ortho_basis_[j]))
                     .is_zero())
                throw std::invalid_argument("ExpectationOperator: basis not orthogonal");
}

Multivector ExpectationOperator::operator()(const Multivector& a) const {
    if (a.dim() != ambient_dim_) throw std::invalid_argument("ExpectationOperator: dimension mismatch");
    Multivector out = a;
    for (const auto& u : ortho_basis_) out = project_u(u, out);
    return out;
}

ExpectationPropertiesReport verify_expectation_properties(
    const ExpectationOperator& e, const std::vector<Multivector>& samples_a,
    const std::vector<std::pair<Multivector, Multivector>>& samples_bc) {
    ExpectationPropertiesReport report;
    report.bimodule_ok = report.idempotent_ok = report.star_ok = true;
    report.projectors_commute_ok = report.adjoint_ok = report.orthogonal_split_ok = true;
    const auto note = [&report](const Multivector& witness) {
        if (!report.counterexample) report.counterexample = witness.str();
    };

    const auto& basis = e.ortho_basis();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            for (const auto& a : samples_a)
                if (project_u(basis[i], project_u(basis[j], a)) !=
                    project_u(basis[j], project_u(basis[i], a))) {
                    report.projectors_commute_ok = false;
                    note(a);
                }

    for (const auto& a : samples_a) {
        const Multivector ea = e(a);
        if (e(ea) != ea) {
            report.idempotent_ok = false;
            note(a);
        }
        if (e(a.star()) != ea.star()) {
            report.star_ok = false;
            note(a);
        }
    }

    size_t bc_index = 0;
    for (const auto& a : samples_a) {
        if (samples_bc.empty()) break;
        const auto& [b, c] = samples_bc[bc_index++ % samples_bc.size()];
        if (e(b * a * c) != b * e(a) * c) {
            report.bimodule_ok = false;
            note(a);
        }
    }

    // tau-adjointness of each projector and orthogonality of the split.
    for (size_t i = 0; i + 1 < samples_a.size(); i += 2) {
        const Multivector& a = samples_a[i];
        const Multivector& b = samples_a[i + 1];
        for (const auto& u : basis)
            if (trace_inner(project_u(u, a), b) != trace_inner(a, project_u(u, b))) {
                report.adjoint_ok = false;
                note(a);
            }
        if (!trace_inner(a - e(a), e(b)).is_zero()) {
            report.orthogonal_split_ok = false;
            note(a);
        }
    }
    return report;
}

PositivityReport verify_positivity_identity(const CoordRow& u, const Multivector& a) {
    PositivityReport report;
    GaussianRational uu;
    for (const auto& v : u) uu += v * v;
    const Multivector u_mv = Multivector::vector(u);
    const Multivector asa = a.star() * a;
    const Multivector gau = a.gamma() * u_mv;
    const Multivector lhs = project_u(u, asa) * GaussianRational(2);
    const Multivector rhs = asa + gau.star() * gau * uu.inv();
    report.identity_ok = (lhs == rhs);
    const GaussianRational tr = project_u(u, asa).trace();
    report.trace_nonneg_ok = tr.is_real() && tr.re().sign() >= 0;
    if (!report.all_ok()) report.counterexample = a.str();
    return report;
}

StabilizationReport verify_stabilization(const Multivector& a, const Subspace& x, const Subspace& n) {
    if (!x.is_real() || !n.is_real())
        throw std::invalid_argument("verify_stabilization: non-real subspace");
    if (!subalgebra_span(n).contains(a))
        throw std::invalid_argument("verify_stabilization: sample not in C(N)");

    StabilizationReport report;
    const Subspace x_n = orthogonal_projection_onto(n, x);

    // Chain X_N = M_0 < M_1 < ... < M_k = X by appending one orthogonal
    // direction of X at a time.
    std::vector<CoordRow> chain_basis = orthogonalize(x_n);
    const size_t base_size = chain_basis.size();
    for (const auto& row : x.basis()) {
        CoordRow residual = row;
        for (const auto& prev : chain_basis) {
            const GaussianRational f = bilinear_form(std::span<const GaussianRational>(prev),
                                                     std::span<const GaussianRational>(residual)) /
                                       bilinear_form(std::span<const GaussianRational>(prev),
                                                     std::span<const GaussianRational>(prev));
            for (size_t i = 0; i < residual.size(); ++i) residual[i] -= f * prev[i];
        }
        bool zero = true;
        for (const auto& v : residual)
            if (!v.is_zero()) zero = false;
        if (!zero) chain_basis.push_back(std::move(residual));
    }

    const ExpectationOperator base(x.ambient_dim(),
                                   std::vector<CoordRow>(chain_basis.begin(), chain_basis.begin() + base_size));
    const Multivector stable_value = base(a);
    report.stable_ok = true;
    for (size_t len = base_size; len <= chain_basis.size(); ++len) {
        const ExpectationOperator e(x.ambient_dim(),
                                    std::vector<CoordRow>(chain_basis.begin(), chain_basis.begin() + len));
        ++report.chain_length;
        if (e(a) != stable_value) {
            report.stable_ok = false;
            report.counterexample = a.str();
        }
    }

    // Fixed points: anything in C(X-perp) passes through every E_M.
    report.fixed_point_ok = true;
    const AlgebraSubspace complement_algebra = subalgebra_span(x.orthogonal_complement());
    for (const auto& fixed : complement_algebra.basis()) {
        for (size_t len = base_size; len <= chain_basis.size(); ++len) {
            const ExpectationOperator e(x.ambient_dim(),
                                        std::vector<CoordRow>(chain_basis.begin(), chain_basis.begin() + len));
            if (e(fixed) != fixed) {
                report.fixed_point_ok = false;
                if (!report.counterexample) report.counterexample = fixed.str();
            }
        }
    }
    return report;
}

RealDualityReport verify_real_duality(const Subspace& x) {
    if (!x.is_real()) throw std::invalid_argument("verify_real_duality: non-real subspace");
    RealDualityReport report;
    const ExpectationOperator e(x);
    const AlgebraSubspace commutant = supercommutant(x);
    const AlgebraSubspace complement_algebra = subalgebra_span(x.orthogonal_complement());
    report.dim = commutant.dim();
    report.fixed_by_expectation_ok = true;
    report.contained_in_complement_ok = true;
    for (const auto& s : commutant.basis()) {
        if (e(s) != s) report.fixed_by_expectation_ok = false;
        if (!complement_algebra.contains(s)) report.contained_in_complement_ok = false;
    }
    report.matches_duality_ok = verify_twisted_duality(x).equal;
    return report;
}

}  // namespace cliff
