#pragma once

// Float-only density operators, quarantined to the channel/partial-trace
// property machinery.  Everything the core claims rely on stays exact.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace hnl {

struct DensityOperator {
    std::vector<int> dims;   // subsystem dims, row-major tensor order
    Eigen::MatrixXcd matrix; // size prod(dims)

    long long total_dim() const;
    void validate(double tol = 1e-10) const;  // square, Hermitian, real trace
};

// Standard partial trace over the listed subsystems (indices into dims).
DensityOperator partial_trace(const DensityOperator& d, const std::vector<int>& discard);

// Tr[d1^dagger d2]
std::complex<double> hs_inner(const DensityOperator& d1, const DensityOperator& d2);

// N(rho) = sum_k A_k rho A_k^dagger with sum_k A_k^dagger A_k = I (checked, 1e-8).
DensityOperator apply_kraus_channel(const DensityOperator& d,
                                    const std::vector<Eigen::MatrixXcd>& kraus);

// True iff the channel output pair stays non-orthogonal (|Tr[.]| > 1e-12).
// Precondition: hs_inner(rho, sigma) != 0.
bool check_lemma1_instance(const DensityOperator& rho, const DensityOperator& sigma,
                           const std::vector<Eigen::MatrixXcd>& kraus);

}  // namespace hnl
