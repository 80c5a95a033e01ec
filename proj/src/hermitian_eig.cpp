#include "relaybf/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace relaybf {

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEig jacobi_eig(const CMatrix& m, double herm_tol) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("jacobi_eig: matrix not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > herm_tol * scale)
        throw std::invalid_argument("jacobi_eig: matrix not Hermitian");

    CMatrix a = 0.5 * (m + m.adjoint());  // exact symmetrization
    CMatrix q = CMatrix::Identity(n, n);

    const double stop = 1e-15 * std::max(1.0, a.norm());
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int qq = p + 1; qq < n; ++qq) {
                const Complex apq = a(p, qq);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                // Phase rotation making the pivot real, then a real Jacobi
                // rotation annihilating it.
                const Complex u = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(qq, qq).real();
                const double zeta = (aqq - app) / (2.0 * r);
                const double t = (zeta >= 0.0)
                                     ? 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta))
                                     : -1.0 / (-zeta + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // V = diag(u,1) * [[c, s], [-s, c]] acting on columns (p,qq).
                const Complex vpp = u * c, vpq = u * s;
                const Complex vqp = -s, vqq = c;
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, qq);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, qq) = akp * vpq + akq * vqq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(qq, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(qq, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, qq) = 0.0;
                a(qq, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(qq, qq) = Complex(a(qq, qq).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const Complex qkp = q(k, p), qkq = q(k, qq);
                    q(k, p) = qkp * vpp + qkq * vqp;
                    q(k, qq) = qkp * vpq + qkq * vqq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEig out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        out.vectors.col(k) = q.col(order[k]);
    }
    return out;
}

CVector canonical_phase(const CVector& v) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            imax = i;
        }
    }
    if (best <= 0.0) return v;
    const Complex phase = std::conj(v(imax)) / best;
    return v * phase;
}

std::pair<CVector, double> principal_eigvec(const CMatrix& m, double herm_tol) {
    const HermitianEig eig = jacobi_eig(m, herm_tol);
    CVector v = canonical_phase(eig.vectors.col(0));
    return {v, eig.values(0)};
}

ComplexSvd complex_svd(const CMatrix& a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::invalid_argument("complex_svd: matrix not square");
    CMatrix h = CMatrix::Zero(2 * n, 2 * n);
    h.topRightCorner(n, n) = a.adjoint();
    h.bottomLeftCorner(n, n) = a;
    const HermitianEig eig = jacobi_eig(h, 1e-8);
    // Eigenpairs come in (+sigma, -sigma) pairs; the top n carry the SVD,
    // with eigenvector (v; u)/sqrt(2) for A v = sigma u.
    ComplexSvd out;
    out.sigma.resize(n);
    out.u.resize(n, n);
    out.v.resize(n, n);
    const double sqrt2 = std::sqrt(2.0);
    for (int k = 0; k < n; ++k) {
        out.sigma(k) = eig.values(k);
        CVector vk = eig.vectors.col(k).head(n) * sqrt2;
        CVector uk = eig.vectors.col(k).tail(n) * sqrt2;
        // Renormalize each block; for nonzero sigma both halves carry 1/2 of
        // the mass, for sigma ~ 0 the split can be uneven.
        const double nv = vk.norm(), nu = uk.norm();
        if (nv > 0) vk /= nv;
        if (nu > 0) uk /= nu;
        out.v.col(k) = vk;
        out.u.col(k) = uk;
    }
    return out;
}

CMatrix hermitian_sqrt(const CMatrix& m, double floor) {
    const HermitianEig eig = jacobi_eig(m, 1e-8);
    const int n = static_cast<int>(m.rows());
    CMatrix out = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = eig.values(k);
        if (lam < floor) throw std::domain_error("hermitian_sqrt: eigenvalue below floor");
        out += std::sqrt(std::max(lam, 0.0)) * eig.vectors.col(k) *
               eig.vectors.col(k).adjoint();
    }
    return out;
}

CMatrix hermitian_inv_sqrt(const CMatrix& m, double floor) {
    const HermitianEig eig = jacobi_eig(m, 1e-8);
    const int n = static_cast<int>(m.rows());
    CMatrix out = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = eig.values(k);
        if (lam <= floor) throw std::domain_error("hermitian_inv_sqrt: eigenvalue below floor");
        out += (1.0 / std::sqrt(lam)) * eig.vectors.col(k) * eig.vectors.col(k).adjoint();
    }
    return out;
}

}  // namespace relaybf
