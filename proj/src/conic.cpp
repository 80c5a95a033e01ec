#include "relaybf/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace relaybf::conic {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int Problem::cone_dim() const {
    int m = 0;
    for (const auto& k : cones) m += k.vec_len();
    return m;
}

void Problem::validate() const {
    const int n = num_vars();
    const int m = cone_dim();
    if (g.rows() != m || g.cols() != n) throw std::invalid_argument("conic: G shape");
    if (h.size() != m) throw std::invalid_argument("conic: h length");
    if (a.rows() > 0 && a.cols() != n) throw std::invalid_argument("conic: A shape");
    if (b.size() != a.rows()) throw std::invalid_argument("conic: b length");
    if (m == 0) throw std::invalid_argument("conic: empty cone");
}

void Problem::dump(std::ostream& os) const {
    os << "n " << num_vars() << " p " << num_eq() << " m " << cone_dim() << "\n";
    os << "cones";
    for (const auto& k : cones)
        os << " " << (k.type == ConeType::NonNegative
                          ? "l"
                          : (k.type == ConeType::SecondOrder ? "q" : "s"))
           << k.dim;
    os << "\nc\n" << c.transpose() << "\n";
    os << "A\n" << a << "\nb\n" << b.transpose() << "\n";
    os << "G\n" << g << "\nh\n" << h.transpose() << "\n";
}

RVector svec(const CMatrix& m) {
    const int n = static_cast<int>(m.rows());
    RVector v(n * n);
    int idx = 0;
    for (int i = 0; i < n; ++i) v(idx++) = m(i, i).real();
    const double s2 = std::sqrt(2.0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) v(idx++) = s2 * m(i, j).real();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) v(idx++) = s2 * m(i, j).imag();
    return v;
}

CMatrix smat(const RVector& v, int n) {
    CMatrix m(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) m(i, i) = v(idx++);
    const double is2 = 1.0 / std::sqrt(2.0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            m(i, j) = v(idx) * is2;
            m(j, i) = v(idx) * is2;
            ++idx;
        }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const double im = v(idx++) * is2;
            m(i, j) += Complex(0.0, im);
            m(j, i) -= Complex(0.0, im);
        }
    return m;
}

namespace {

// ---------------------------------------------------------------------
// Per-cone kernels. All operate on contiguous segments of the big
// composite vectors; the scaling state is recomputed each iteration.
// ---------------------------------------------------------------------

struct BlockScaling {
    ConeSpec spec;
    // NonNegative
    RVector w_nn;
    // SecondOrder
    double eta = 1.0;
    RVector wbar;
    // HermitianPsd
    CMatrix r, rinv;
    RVector lam_diag;
    // scaled point for this block
    RVector lambda;
};

RVector cone_identity(const ConeSpec& spec) {
    RVector e = RVector::Zero(spec.vec_len());
    switch (spec.type) {
        case ConeType::NonNegative:
            e.setOnes();
            break;
        case ConeType::SecondOrder:
            e(0) = 1.0;
            break;
        case ConeType::HermitianPsd:
            for (int i = 0; i < spec.dim; ++i) e(i) = 1.0;
            break;
    }
    return e;
}

// soc "J" inner product t^2 - ||x||^2
double soc_res(const RVector& u) { return u(0) * u(0) - u.tail(u.size() - 1).squaredNorm(); }

bool in_interior(const ConeSpec& spec, const RVector& u) {
    switch (spec.type) {
        case ConeType::NonNegative:
            return (u.array() > 0.0).all();
        case ConeType::SecondOrder:
            return u(0) > 0.0 && soc_res(u) > 0.0;
        case ConeType::HermitianPsd: {
            const HermitianEig eig = jacobi_eig(smat(u, spec.dim), 1e-6);
            return eig.values(eig.values.size() - 1) > 0.0;
        }
    }
    return false;
}

bool compute_scaling(BlockScaling& bs, const RVector& s, const RVector& z) {
    const ConeSpec& spec = bs.spec;
    switch (spec.type) {
        case ConeType::NonNegative: {
            if (!(s.array() > 0.0).all() || !(z.array() > 0.0).all()) return false;
            bs.w_nn = (s.array() / z.array()).sqrt();
            bs.lambda = (s.array() * z.array()).sqrt();
            return true;
        }
        case ConeType::SecondOrder: {
            const double sres = soc_res(s), zres = soc_res(z);
            if (s(0) <= 0.0 || z(0) <= 0.0 || sres <= 0.0 || zres <= 0.0) return false;
            const double snrm = std::sqrt(sres), znrm = std::sqrt(zres);
            const RVector st = s / snrm, zt = z / znrm;
            const double dot_j = st(0) * zt(0) - st.tail(st.size() - 1).dot(zt.tail(zt.size() - 1));
            const double gamma = std::sqrt(0.5 * (1.0 + dot_j));
            RVector wbar(s.size());
            wbar(0) = (st(0) + zt(0)) / (2.0 * gamma);
            wbar.tail(s.size() - 1) =
                (st.tail(s.size() - 1) - zt.tail(s.size() - 1)) / (2.0 * gamma);
            bs.wbar = wbar;
            bs.eta = std::sqrt(snrm / znrm);
            return true;
        }
        case ConeType::HermitianPsd: {
            const int n = spec.dim;
            const CMatrix sm = smat(s, n);
            const CMatrix zm = smat(z, n);
            CMatrix ls, lz, ls_inv;
            try {
                ls = hermitian_sqrt(sm, 0.0);
                lz = hermitian_sqrt(zm, 0.0);
                ls_inv = hermitian_inv_sqrt(sm, 0.0);
            } catch (const std::domain_error&) {
                return false;
            }
            const ComplexSvd svd = complex_svd(lz * ls);
            if (svd.sigma(svd.sigma.size() - 1) <= 0.0) return false;
            RVector sig_isqrt(n), sig_sqrt(n);
            for (int i = 0; i < n; ++i) {
                sig_sqrt(i) = std::sqrt(svd.sigma(i));
                sig_isqrt(i) = 1.0 / sig_sqrt(i);
            }
            bs.r = ls * svd.v * sig_isqrt.asDiagonal();
            bs.rinv = sig_sqrt.asDiagonal() * svd.v.adjoint() * ls_inv;
            bs.lam_diag = svd.sigma;
            CMatrix lam = CMatrix::Zero(n, n);
            for (int i = 0; i < n; ++i) lam(i, i) = svd.sigma(i);
            bs.lambda = svec(lam);
            return true;
        }
    }
    return false;
}

enum class WOp { W, WT, Winv, WinvT };

RVector apply_scaling(const BlockScaling& bs, const RVector& u, WOp op) {
    switch (bs.spec.type) {
        case ConeType::NonNegative:
            if (op == WOp::W || op == WOp::WT) return bs.w_nn.cwiseProduct(u);
            return u.cwiseQuotient(bs.w_nn);
        case ConeType::SecondOrder: {
            // W = eta (2 wbar wbar' - J); W^{-1} = (2 J wbar wbar' J - J)/eta.
            const long d = u.size();
            RVector ju(d);
            if (op == WOp::W || op == WOp::WT) {
                const double dot = bs.wbar.dot(u);
                ju(0) = u(0);
                ju.tail(d - 1) = -u.tail(d - 1);
                return bs.eta * (2.0 * dot * bs.wbar - ju);
            }
            RVector v(d);
            v(0) = bs.wbar(0);
            v.tail(d - 1) = -bs.wbar.tail(d - 1);
            const double dot = v.dot(u);
            ju(0) = u(0);
            ju.tail(d - 1) = -u.tail(d - 1);
            return (2.0 * dot * v - ju) / bs.eta;
        }
        case ConeType::HermitianPsd: {
            const int n = bs.spec.dim;
            const CMatrix um = smat(u, n);
            switch (op) {
                case WOp::W: return svec(bs.r.adjoint() * um * bs.r);
                case WOp::WT: return svec(bs.r * um * bs.r.adjoint());
                case WOp::Winv: return svec(bs.rinv.adjoint() * um * bs.rinv);
                case WOp::WinvT: return svec(bs.rinv * um * bs.rinv.adjoint());
            }
        }
    }
    throw std::logic_error("apply_scaling: unreachable");
}

RVector jordan_prod(const ConeSpec& spec, const RVector& u, const RVector& v) {
    switch (spec.type) {
        case ConeType::NonNegative:
            return u.cwiseProduct(v);
        case ConeType::SecondOrder: {
            const long d = u.size();
            RVector out(d);
            out(0) = u.dot(v);
            out.tail(d - 1) = u(0) * v.tail(d - 1) + v(0) * u.tail(d - 1);
            return out;
        }
        case ConeType::HermitianPsd: {
            const int n = spec.dim;
            const CMatrix um = smat(u, n), vm = smat(v, n);
            return svec(0.5 * (um * vm + vm * um));
        }
    }
    throw std::logic_error("jordan_prod: unreachable");
}

// Solve lambda o x = d in the Jordan algebra of the cone.
RVector jordan_solve(const BlockScaling& bs, const RVector& d) {
    const ConeSpec& spec = bs.spec;
    const RVector& lam = bs.lambda;
    switch (spec.type) {
        case ConeType::NonNegative:
            return d.cwiseQuotient(lam);
        case ConeType::SecondOrder: {
            const long dd = d.size();
            const double a = soc_res(lam);
            RVector x(dd);
            x(0) = (lam(0) * d(0) - lam.tail(dd - 1).dot(d.tail(dd - 1))) / a;
            x.tail(dd - 1) = (d.tail(dd - 1) - x(0) * lam.tail(dd - 1)) / lam(0);
            return x;
        }
        case ConeType::HermitianPsd: {
            const int n = spec.dim;
            const CMatrix dm = smat(d, n);
            CMatrix x(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    x(i, j) = 2.0 * dm(i, j) / (bs.lam_diag(i) + bs.lam_diag(j));
            return svec(x);
        }
    }
    throw std::logic_error("jordan_solve: unreachable");
}

// Largest alpha with lam + alpha d in the cone (lam interior).
double max_step(const BlockScaling& bs, const RVector& d) {
    const ConeSpec& spec = bs.spec;
    const RVector& lam = bs.lambda;
    switch (spec.type) {
        case ConeType::NonNegative: {
            double amax = kInf;
            for (long i = 0; i < d.size(); ++i)
                if (d(i) < 0.0) amax = std::min(amax, -lam(i) / d(i));
            return amax;
        }
        case ConeType::SecondOrder: {
            // first positive root of (lam + a d)' J (lam + a d) = 0
            const long n = d.size();
            const double qa = d(0) * d(0) - d.tail(n - 1).squaredNorm();
            const double qb = 2.0 * (lam(0) * d(0) - lam.tail(n - 1).dot(d.tail(n - 1)));
            const double qc = soc_res(lam);
            double amax = kInf;
            if (std::abs(qa) < 1e-300) {
                if (qb < 0.0) amax = -qc / qb;
            } else {
                const double disc = qb * qb - 4.0 * qa * qc;
                if (disc >= 0.0) {
                    const double sq = std::sqrt(disc);
                    const double r1 = (-qb - sq) / (2.0 * qa);
                    const double r2 = (-qb + sq) / (2.0 * qa);
                    if (r1 > 0.0) amax = std::min(amax, r1);
                    if (r2 > 0.0) amax = std::min(amax, r2);
                }
            }
            return amax;
        }
        case ConeType::HermitianPsd: {
            const int n = spec.dim;
            const CMatrix dm = smat(d, n);
            CMatrix scaled(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    scaled(i, j) =
                        dm(i, j) / std::sqrt(bs.lam_diag(i) * bs.lam_diag(j));
            const HermitianEig eig = jacobi_eig(scaled, 1e-6);
            const double lmin = eig.values(eig.values.size() - 1);
            return lmin < 0.0 ? -1.0 / lmin : kInf;
        }
    }
    throw std::logic_error("max_step: unreachable");
}

struct ConeLayout {
    std::vector<BlockScaling> blocks;
    std::vector<int> offsets;
    int total = 0;
    int degree = 0;

    explicit ConeLayout(const std::vector<ConeSpec>& specs) {
        int off = 0;
        for (const auto& sp : specs) {
            BlockScaling bs;
            bs.spec = sp;
            blocks.push_back(bs);
            offsets.push_back(off);
            off += sp.vec_len();
            degree += sp.barrier_degree();
        }
        total = off;
    }

    bool update(const RVector& s, const RVector& z) {
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const int off = offsets[k], len = blocks[k].spec.vec_len();
            if (!compute_scaling(blocks[k], s.segment(off, len), z.segment(off, len)))
                return false;
        }
        return true;
    }

    RVector identity() const {
        RVector e(total);
        for (std::size_t k = 0; k < blocks.size(); ++k)
            e.segment(offsets[k], blocks[k].spec.vec_len()) = cone_identity(blocks[k].spec);
        return e;
    }

    bool interior(const RVector& u) const {
        for (std::size_t k = 0; k < blocks.size(); ++k)
            if (!in_interior(blocks[k].spec, u.segment(offsets[k], blocks[k].spec.vec_len())))
                return false;
        return true;
    }

    RVector apply(const RVector& u, WOp op) const {
        RVector out(total);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const int off = offsets[k], len = blocks[k].spec.vec_len();
            out.segment(off, len) = apply_scaling(blocks[k], u.segment(off, len), op);
        }
        return out;
    }

    RVector lambda() const {
        RVector out(total);
        for (std::size_t k = 0; k < blocks.size(); ++k)
            out.segment(offsets[k], blocks[k].spec.vec_len()) = blocks[k].lambda;
        return out;
    }

    RVector prod(const RVector& u, const RVector& v) const {
        RVector out(total);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const int off = offsets[k], len = blocks[k].spec.vec_len();
            out.segment(off, len) =
                jordan_prod(blocks[k].spec, u.segment(off, len), v.segment(off, len));
        }
        return out;
    }

    RVector lam_solve(const RVector& d) const {
        RVector out(total);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const int off = offsets[k], len = blocks[k].spec.vec_len();
            out.segment(off, len) = jordan_solve(blocks[k], d.segment(off, len));
        }
        return out;
    }

    double step_bound(const RVector& d) const {
        double amax = kInf;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const int off = offsets[k], len = blocks[k].spec.vec_len();
            amax = std::min(amax, max_step(blocks[k], d.segment(off, len)));
        }
        return amax;
    }
};

// KKT solver for [0 A' G'; A 0 0; G 0 -W'W] via the Schur complement on
// (x, y); refreshed every iteration.
struct KktSolver {
    const Problem& prob;
    const ConeLayout& cones;
    RMatrix winv_t_g;  // W^{-T} G
    Eigen::FullPivLU<RMatrix> lu;
    int refine_rounds;

    KktSolver(const Problem& p, const ConeLayout& c, int refine)
        : prob(p), cones(c), refine_rounds(refine) {
        const int n = p.num_vars(), peq = p.num_eq();
        winv_t_g.resize(c.total, n);
        for (int j = 0; j < n; ++j)
            winv_t_g.col(j) = c.apply(p.g.col(j), WOp::WinvT);
        RMatrix big = RMatrix::Zero(n + peq, n + peq);
        big.topLeftCorner(n, n) = winv_t_g.transpose() * winv_t_g;
        big.topLeftCorner(n, n).diagonal().array() +=
            1e-13 * (1.0 + big.topLeftCorner(n, n).diagonal().cwiseAbs().maxCoeff());
        if (peq > 0) {
            big.topRightCorner(n, peq) = p.a.transpose();
            big.bottomLeftCorner(peq, n) = p.a;
        }
        lu.compute(big);
    }

    void solve_once(const RVector& bx, const RVector& by, const RVector& bz, RVector& dx,
                    RVector& dy, RVector& dz) const {
        const int n = prob.num_vars(), peq = prob.num_eq();
        const RVector wtbz = cones.apply(bz, WOp::WinvT);
        RVector rhs(n + peq);
        rhs.head(n) = bx + winv_t_g.transpose() * wtbz;
        if (peq > 0) rhs.tail(peq) = by;
        const RVector sol = lu.solve(rhs);
        dx = sol.head(n);
        dy = peq > 0 ? RVector(sol.tail(peq)) : RVector(0);
        dz = cones.apply(winv_t_g * dx - wtbz, WOp::Winv);
    }

    void solve(const RVector& bx, const RVector& by, const RVector& bz, RVector& dx,
               RVector& dy, RVector& dz) const {
        solve_once(bx, by, bz, dx, dy, dz);
        for (int round = 0; round < refine_rounds; ++round) {
            const RVector wdz = cones.apply(dz, WOp::W);
            const RVector r1 =
                bx - (prob.a.transpose() * dy + prob.g.transpose() * dz);
            const RVector r2 = by - prob.a * dx;
            const RVector r3 = bz - (prob.g * dx - cones.apply(wdz, WOp::WT));
            RVector ex, ey, ez;
            solve_once(r1, r2, r3, ex, ey, ez);
            dx += ex;
            if (dy.size() > 0) dy += ey;
            dz += ez;
        }
    }
};

}  // namespace

Solution solve(const Problem& prob, const SolverOptions& opts) {
    prob.validate();
    const int n = prob.num_vars();
    const int peq = prob.num_eq();
    ConeLayout cones(prob.cones);
    const int m = cones.total;
    if (prob.g.rows() != m) throw std::invalid_argument("conic: G rows != cone dim");

    const double scale_b = std::max(1.0, prob.b.size() ? prob.b.norm() : 0.0);
    const double scale_h = std::max(1.0, prob.h.norm());
    const double scale_c = std::max(1.0, prob.c.norm());

    // Cold start at the unit point.
    RVector x = RVector::Zero(n);
    RVector y = RVector::Zero(peq);
    RVector s = cones.identity();
    RVector z = cones.identity();
    double tau = 1.0, kappa = 1.0;

    Solution sol;
    const int degree = cones.degree + 1;

    for (int iter = 0; iter <= opts.max_iters; ++iter) {
        // Residuals of the homogeneous model.
        const RVector res_x = prob.a.transpose() * y + prob.g.transpose() * z + prob.c * tau;
        const RVector res_y = prob.a * x - prob.b * tau;
        const RVector res_z = prob.g * x + s - prob.h * tau;
        const double res_tau = prob.c.dot(x) + prob.b.dot(y) + prob.h.dot(z) + kappa;

        // Convergence bookkeeping on the de-homogenized iterate.
        const double pobj = prob.c.dot(x) / tau;
        const double dobj = -(prob.b.dot(y) + prob.h.dot(z)) / tau;
        const double pres =
            std::max(peq > 0 ? (prob.a * x - prob.b * tau).norm() / (tau * scale_b) : 0.0,
                     (prob.g * x + s - prob.h * tau).norm() / (tau * scale_h));
        const double dres = res_x.norm() / (tau * scale_c);
        const double gap = s.dot(z) / (tau * tau);
        const double rel_gap = gap / std::max({1.0, std::abs(pobj), std::abs(dobj)});

        sol.x = x / tau;
        sol.y = y / tau;
        sol.z = z / tau;
        sol.s = s / tau;
        sol.pobj = pobj;
        sol.dobj = dobj;
        sol.gap = gap;
        sol.rel_gap = rel_gap;
        sol.pres = pres;
        sol.dres = dres;
        sol.tau = tau;
        sol.kappa = kappa;
        sol.iterations = iter;

        if (pres <= opts.feastol && dres <= opts.feastol &&
            (gap <= opts.abstol || rel_gap <= opts.reltol)) {
            sol.status = SolveStatus::Optimal;
            return sol;
        }

        // Infeasibility certificates.
        const double by_hz = prob.b.dot(y) + prob.h.dot(z);
        if (by_hz < -1e-10 * scale_c) {
            const double pinfres =
                (prob.a.transpose() * y + prob.g.transpose() * z).norm() / (-by_hz);
            if (pinfres <= opts.feastol && tau <= 1e-6 * std::max(1.0, kappa)) {
                sol.status = SolveStatus::PrimalInfeasible;
                sol.y = y / (-by_hz);
                sol.z = z / (-by_hz);
                return sol;
            }
        }
        const double ctx = prob.c.dot(x);
        if (ctx < -1e-10) {
            const double dinfres =
                std::max(peq > 0 ? (prob.a * x).norm() : 0.0, (prob.g * x + s).norm()) /
                (-ctx);
            if (dinfres <= opts.feastol && tau <= 1e-6 * std::max(1.0, kappa)) {
                sol.status = SolveStatus::DualInfeasible;
                sol.x = x / (-ctx);
                sol.s = s / (-ctx);
                return sol;
            }
        }

        if (iter == opts.max_iters) break;

        if (!cones.update(s, z)) {
            sol.status = SolveStatus::NumericalProblem;
            return sol;
        }
        const RVector lambda = cones.lambda();
        const double mu = (s.dot(z) + tau * kappa) / degree;

        KktSolver kkt(prob, cones, opts.refine_rounds);

        // Shared solve against (-c, b, h).
        RVector v_x, v_y, v_z;
        kkt.solve(-prob.c, prob.b, prob.h, v_x, v_y, v_z);

        const auto direction = [&](const RVector& dx_rhs, const RVector& dy_rhs,
                                   const RVector& dz_rhs, double dtau_rhs,
                                   const RVector& ds_comp, double dkappa_comp, RVector& DX,
                                   RVector& DY, RVector& DZ, RVector& DS, double& DTAU,
                                   double& DKAPPA) {
            const RVector lam_ds = cones.lam_solve(ds_comp);
            const RVector dz_mod = dz_rhs - cones.apply(lam_ds, WOp::WT);
            RVector u_x, u_y, u_z;
            kkt.solve(dx_rhs, dy_rhs, dz_mod, u_x, u_y, u_z);
            const double denom =
                prob.c.dot(v_x) + prob.b.dot(v_y) + prob.h.dot(v_z) - kappa / tau;
            DTAU = (dtau_rhs - dkappa_comp / tau - prob.c.dot(u_x) - prob.b.dot(u_y) -
                    prob.h.dot(u_z)) /
                   denom;
            DX = u_x + DTAU * v_x;
            DY = u_y.size() > 0 ? RVector(u_y + DTAU * v_y) : RVector(0);
            DZ = u_z + DTAU * v_z;
            DS = cones.apply(lam_ds, WOp::WT) - cones.apply(cones.apply(DZ, WOp::W), WOp::WT);
            DKAPPA = (dkappa_comp - kappa * DTAU) / tau;
        };

        // Affine (predictor) direction.
        RVector dxa, dya, dza, dsa;
        double dtaua, dkappaa;
        direction(-res_x, -res_y, -res_z, -res_tau, -cones.prod(lambda, lambda),
                  -tau * kappa, dxa, dya, dza, dsa, dtaua, dkappaa);

        double alpha_aff = cones.step_bound(cones.apply(dsa, WOp::WinvT));
        alpha_aff = std::min(alpha_aff, cones.step_bound(cones.apply(dza, WOp::W)));
        if (dtaua < 0.0) alpha_aff = std::min(alpha_aff, -tau / dtaua);
        if (dkappaa < 0.0) alpha_aff = std::min(alpha_aff, -kappa / dkappaa);
        alpha_aff = std::min(alpha_aff, 1.0);

        const double sigma = std::pow(1.0 - alpha_aff, 3);

        // Combined (corrector) direction.
        const RVector corr =
            cones.prod(cones.apply(dsa, WOp::WinvT), cones.apply(dza, WOp::W));
        RVector ds_comp = -cones.prod(lambda, lambda) - corr + sigma * mu * cones.identity();
        const double dkappa_comp = -tau * kappa - dtaua * dkappaa + sigma * mu;
        const double rscale = 1.0 - sigma;

        RVector dx, dy, dz, ds;
        double dtau, dkappa;
        direction(-rscale * res_x, -rscale * res_y, -rscale * res_z, -rscale * res_tau,
                  ds_comp, dkappa_comp, dx, dy, dz, ds, dtau, dkappa);

        double alpha = cones.step_bound(cones.apply(ds, WOp::WinvT));
        alpha = std::min(alpha, cones.step_bound(cones.apply(dz, WOp::W)));
        if (dtau < 0.0) alpha = std::min(alpha, -tau / dtau);
        if (dkappa < 0.0) alpha = std::min(alpha, -kappa / dkappa);
        alpha = std::min(opts.step_frac * alpha, 1.0);

        if (!std::isfinite(alpha) || alpha <= 1e-14) {
            sol.status = SolveStatus::NumericalProblem;
            return sol;
        }

        x += alpha * dx;
        if (peq > 0) y += alpha * dy;
        z += alpha * dz;
        s += alpha * ds;
        tau += alpha * dtau;
        kappa += alpha * dkappa;

        if (tau <= 0.0 || kappa < 0.0 || !cones.interior(s) || !cones.interior(z)) {
            sol.status = SolveStatus::NumericalProblem;
            return sol;
        }
    }

    sol.status = SolveStatus::MaxIterations;
    return sol;
}

}  // namespace relaybf::conic
