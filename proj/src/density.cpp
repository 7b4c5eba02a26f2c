#include "hnl/density.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hnl {

long long DensityOperator::total_dim() const {
    long long d = 1;
    for (int x : dims) d *= x;
    return d;
}

void DensityOperator::validate(double tol) const {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density operator not square");
    if (matrix.rows() != total_dim()) throw std::invalid_argument("dims do not match matrix size");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("density operator not Hermitian");
    if (std::abs(matrix.trace().imag()) > tol)
        throw std::invalid_argument("density operator trace not real");
}

DensityOperator partial_trace(const DensityOperator& d, const std::vector<int>& discard) {
    if (discard.empty()) throw std::invalid_argument("partial_trace: nothing to discard");
    std::set<int> drop(discard.begin(), discard.end());
    for (int i : drop)
        if (i < 0 || i >= static_cast<int>(d.dims.size()))
            throw std::invalid_argument("partial_trace: bad subsystem index");
    if (drop.size() == d.dims.size())
        throw std::invalid_argument("partial_trace: cannot discard every subsystem");

    const int n = static_cast<int>(d.dims.size());
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!drop.count(i)) keep.push_back(i);

    long long keep_dim = 1, drop_dim = 1;
    for (int i : keep) keep_dim *= d.dims[i];
    for (int i : drop) drop_dim *= d.dims[i];

    // strides of the full tensor index
    std::vector<long long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * d.dims[i + 1];

    auto flat = [&](const std::vector<int>& keep_idx, const std::vector<int>& drop_idx) {
        long long f = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) f += stride[keep[k]] * keep_idx[k];
        std::size_t k = 0;
        for (int i : drop) f += stride[i] * drop_idx[k++];
        return f;
    };

    auto unrank = [](long long r, const std::vector<int>& dims_sel) {
        std::vector<int> idx(dims_sel.size());
        for (int i = static_cast<int>(dims_sel.size()) - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(r % dims_sel[i]);
            r /= dims_sel[i];
        }
        return idx;
    };

    std::vector<int> keep_dims, drop_dims;
    for (int i : keep) keep_dims.push_back(d.dims[i]);
    for (int i : drop) drop_dims.push_back(d.dims[i]);

    DensityOperator out;
    out.dims = keep_dims;
    out.matrix = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
    for (long long r = 0; r < keep_dim; ++r) {
        auto ri = unrank(r, keep_dims);
        for (long long c = 0; c < keep_dim; ++c) {
            auto ci = unrank(c, keep_dims);
            std::complex<double> acc = 0;
            for (long long t = 0; t < drop_dim; ++t) {
                auto ti = unrank(t, drop_dims);
                acc += d.matrix(flat(ri, ti), flat(ci, ti));
            }
            out.matrix(r, c) = acc;
        }
    }
    return out;
}

std::complex<double> hs_inner(const DensityOperator& d1, const DensityOperator& d2) {
    if (d1.total_dim() != d2.total_dim()) throw std::invalid_argument("hs_inner: dim mismatch");
    return (d1.matrix.adjoint() * d2.matrix).trace();
}

DensityOperator apply_kraus_channel(const DensityOperator& d,
                                    const std::vector<Eigen::MatrixXcd>& kraus) {
    if (kraus.empty()) throw std::invalid_argument("empty Kraus set");
    const auto n = d.matrix.rows();
    Eigen::MatrixXcd completeness = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& a : kraus) {
        if (a.cols() != n) throw std::invalid_argument("Kraus operator column dim mismatch");
        completeness += a.adjoint() * a;
    }
    if ((completeness - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("Kraus set is not trace preserving");

    const auto m = kraus.front().rows();
    DensityOperator out;
    out.dims = {static_cast<int>(m)};
    out.matrix = Eigen::MatrixXcd::Zero(m, m);
    for (const auto& a : kraus) out.matrix += a * d.matrix * a.adjoint();
    return out;
}

bool check_lemma1_instance(const DensityOperator& rho, const DensityOperator& sigma,
                           const std::vector<Eigen::MatrixXcd>& kraus) {
    if (std::abs(hs_inner(rho, sigma)) == 0.0)
        throw std::invalid_argument("check_lemma1_instance: inputs are orthogonal");
    auto a = apply_kraus_channel(rho, kraus);
    auto b = apply_kraus_channel(sigma, kraus);
    return std::abs(hs_inner(a, b)) > 1e-12;
}

}  // namespace hnl
