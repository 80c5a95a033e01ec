#pragma once

#include <iosfwd>
#include <vector>

#include "relaybf/hermitian_eig.hpp"

namespace relaybf::conic {

enum class ConeType { NonNegative, SecondOrder, HermitianPsd };

/// One cone block. For NonNegative, `dim` is the number of scalar
/// components. For SecondOrder, `dim` is the cone dimension (t, x) with
/// t >= ||x||. For HermitianPsd, `dim` is the matrix side n and the block
/// occupies n*n real components in svec form.
struct ConeSpec {
    ConeType type;
    int dim;

    int vec_len() const {
        return type == ConeType::HermitianPsd ? dim * dim : dim;
    }
    int barrier_degree() const {
        switch (type) {
            case ConeType::NonNegative: return dim;
            case ConeType::SecondOrder: return 1;
            case ConeType::HermitianPsd: return dim;
        }
        return 0;
    }
};

/// Conic program in standard form:
///   minimize    c'x
///   subject to  A x = b
///               G x + s = h,   s in K.
struct Problem {
    RVector c;
    RMatrix a;   // may have zero rows
    RVector b;
    RMatrix g;
    RVector h;
    std::vector<ConeSpec> cones;

    int num_vars() const { return static_cast<int>(c.size()); }
    int num_eq() const { return static_cast<int>(a.rows()); }
    int cone_dim() const;
    void validate() const;
    void dump(std::ostream& os) const;  // plain-text coefficient dump
};

enum class SolveStatus {
    Optimal,
    PrimalInfeasible,  // certificate in (y, z)
    DualInfeasible,    // certificate in (x, s)
    MaxIterations,
    NumericalProblem,
};

struct Solution {
    SolveStatus status = SolveStatus::NumericalProblem;
    RVector x, s, z, y;
    double pobj = 0.0, dobj = 0.0;
    double gap = 0.0, rel_gap = 0.0;
    double pres = 0.0, dres = 0.0;
    double tau = 0.0, kappa = 0.0;
    int iterations = 0;
};

struct SolverOptions {
    double feastol = 1e-7;
    double abstol = 1e-9;
    double reltol = 1e-8;
    int max_iters = 100;
    double step_frac = 0.99;
    int refine_rounds = 1;
};

/// Primal-dual interior-point solve of the homogeneous self-dual embedding
/// with Nesterov-Todd scaling and Mehrotra correction. Cold start at the
/// unit point (all slacks at the cone identity).
Solution solve(const Problem& prob, const SolverOptions& opts = {});

/// Isometric real vectorization of a Hermitian matrix:
/// [diag; sqrt(2) Re upper; sqrt(2) Im upper], upper triangle by columns.
/// svec(A) . svec(B) = tr(AB) for Hermitian A, B.
RVector svec(const CMatrix& m);
CMatrix smat(const RVector& v, int n);

}  // namespace relaybf::conic
