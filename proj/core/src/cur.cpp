#include "tcur/cur.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Dense>

#include "complex_linalg.hpp"
#include "tcur/parallel.hpp"
#include "tcur/tproduct.hpp"
#include "tcur/tsvd.hpp"

namespace tcur {

namespace {

// Row gather of a spectral slice: Shat_i^T Uhat_i = Uhat_i(s,:) because the
// spectral slices of the selection tensor are identical real I(:,s).
template <typename Mat>
Eigen::MatrixXcd gather_rows(const Mat& m, const IndexSet& s) {
    Eigen::MatrixXcd out(s.size(), m.cols());
    for (Index t = 0; t < s.size(); ++t)
        out.row(t) = m.row(s.indices[static_cast<size_t>(t)] - 1);
    return out;
}

} // namespace

Projector build_projector(const Tensor3& basis, const IndexSet& s) {
    if (s.bound != basis.i1())
        throw IndexError("projector index set bound does not match basis I1");
    s.validate();
    if (s.size() != basis.i2())
        throw ShapeError("projector needs exactly one index per basis lateral slice");

    Projector p;
    p.s_ = s;
    p.basis_hat_ = fft_mode3(basis);
    const Index half = p.basis_hat_.half();
    p.inverses_.resize(static_cast<size_t>(half));
    for (Index k = 0; k < half; ++k) {
        Eigen::MatrixXcd sub = gather_rows(p.basis_hat_.slice(k), s);
        detail::SvdInverse si = detail::svd_inverse(sub);
        if (si.singular(s.size()))
            throw DegeneracyError("projector: singular selection submatrix in spectral slice " +
                                  std::to_string(k + 1), s.size());
        p.inverses_[static_cast<size_t>(k)] = si.inverse;
    }
    return p;
}

Tensor3 Projector::apply(const Tensor3& g) const {
    if (g.i1() != basis_hat_.i1())
        throw ShapeError("projector input first mode does not match basis");
    if (g.i3() != basis_hat_.i3())
        throw ShapeError("projector input third mode does not match basis");

    SpectralTensor gh = fft_mode3(g);
    SpectralTensor out(g.i1(), g.i2(), g.i3(), /*real_origin=*/true);
    const Index half = out.half();
    parallel_for(half, [&](Index k) {
        Eigen::MatrixXcd sampled = gather_rows(gh.slice(k), s_);
        out.slice(k).noalias() =
            basis_hat_.slice(k) * (inverses_[static_cast<size_t>(k)] * sampled);
    });
    out.mirror_upper();
    return ifft_mode3(out);
}

const char* middle_name(MiddleVariant v) {
    return v == MiddleVariant::optimal ? "optimal" : "intersection";
}

Tensor3 cur_middle_optimal(const Tensor3& x, const Tensor3& c, const Tensor3& r) {
    return tproduct(tproduct(tpinv(c), x), tpinv(r));
}

Tensor3 cur_middle_intersection(const Tensor3& x, const IndexSet& p, const IndexSet& q,
                                bool* near_singular) {
    Tensor3 intersection = slice_horizontal(slice_lateral(x, q), p);
    if (near_singular) {
        *near_singular = false;
        SpectralTensor ih = fft_mode3(intersection);
        for (Index k = 0; k < ih.half(); ++k) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ih.slice(k));
            const auto& sv = svd.singularValues();
            if (sv(0) > 0.0 && sv(sv.size() - 1) < 1e-12 * sv(0)) {
                *near_singular = true;
                break;
            }
        }
    }
    return tpinv(intersection);
}

CurModel build_cur(const Tensor3& x, const IndexSet& p, const IndexSet& q,
                   MiddleVariant variant) {
    CurModel m;
    m.p = p;
    m.q = q;
    m.middle_variant = variant;
    m.c = slice_lateral(x, q);
    m.r = slice_horizontal(x, p);
    if (variant == MiddleVariant::optimal)
        m.u_mid = cur_middle_optimal(x, m.c, m.r);
    else
        m.u_mid = cur_middle_intersection(x, p, q, &m.intersection_near_singular);
    return m;
}

Tensor3 cur_reconstruct(const CurModel& model) {
    return tproduct(tproduct(model.c, model.u_mid), model.r);
}

double cur_error(const Tensor3& x, const CurModel& model) {
    return fro_norm(x - cur_reconstruct(model));
}

namespace {

double eta_constant(const SpectralTensor& basis_hat, const IndexSet& s) {
    const Index rank = s.size();
    double max_sq = 0.0;
    for (Index k = 0; k < basis_hat.half(); ++k) {
        Eigen::MatrixXcd sub = gather_rows(basis_hat.slice(k), s);
        double inv_norm;
        if (rank <= 64) {
            detail::SvdInverse si = detail::svd_inverse(sub);
            if (si.singular(rank))
                throw SingularSliceError("error constant is infinite: singular selection "
                                         "submatrix", static_cast<long>(k) + 1);
            inv_norm = detail::spectral_norm(si.inverse);
        } else {
            double smin = detail::smallest_singular_value(sub);
            if (smin <= 0.0)
                throw SingularSliceError("error constant is infinite: singular selection "
                                         "submatrix", static_cast<long>(k) + 1);
            inv_norm = 1.0 / smin;
        }
        max_sq = std::max(max_sq, inv_norm * inv_norm);
    }
    return max_sq / static_cast<double>(basis_hat.i3());
}

} // namespace

ErrorConstants error_constants(const Tensor3& basis_u, const IndexSet& p,
                               const Tensor3& basis_v, const IndexSet& q) {
    if (p.size() != basis_u.i2())
        throw ShapeError("error_constants: |p| must equal U basis width");
    if (q.size() != basis_v.i2())
        throw ShapeError("error_constants: |q| must equal V basis width");
    ErrorConstants out;
    out.eta_p = eta_constant(fft_mode3(basis_u), p);
    out.eta_q = eta_constant(fft_mode3(basis_v), q);
    return out;
}

BoundReport verify_bound(const Tensor3& x, const CurModel& model,
                         const ErrorConstants& constants) {
    if (model.middle_variant != MiddleVariant::optimal)
        throw std::invalid_argument("verify_bound requires the optimal middle variant");
    if (model.p.size() != model.q.size())
        throw std::invalid_argument("verify_bound requires |p| == |q|");
    const Index rank = model.p.size();

    BoundReport report;
    report.eta_p = constants.eta_p;
    report.eta_q = constants.eta_q;

    auto spectra = slice_singular_values(x);
    double tail_sq = 0.0;
    for (const auto& sv : spectra)
        for (Index t = rank; t < sv.size(); ++t) tail_sq += sv(t) * sv(t);
    report.tail_sq = tail_sq;

    double err = cur_error(x, model);
    report.theorem_lhs = err * err;
    report.theorem_rhs = (constants.eta_p + constants.eta_q) * tail_sq;
    report.theorem_pass = report.theorem_lhs <= report.theorem_rhs * (1.0 + 1e-8);

    TSvdFactors factors = truncated_tsvd(x, rank);
    Projector proj = build_projector(factors.u, model.p);
    double perr = fro_norm(x - proj.apply(x));
    report.projector_lhs = perr * perr;
    report.projector_rhs = constants.eta_p * tail_sq;
    report.projector_pass = report.projector_lhs <= report.projector_rhs * (1.0 + 1e-8);
    return report;
}

} // namespace tcur
