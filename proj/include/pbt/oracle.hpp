#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pbt/diagram_algebra.hpp"
#include "pbt/permutation.hpp"

namespace pbt::oracle {

/// Dense operators on (C^d)^{N+1}, subsystem order (0, 1, ..., N) with
/// subsystem 0 the slowest-varying index. Everything here is real.
using DenseOperator = Eigen::MatrixXd;

inline constexpr long kMaxDimension = 4096;

/// d^(n+1); throws ValidationError above kMaxDimension.
long hilbertDimension(int n, int d);

/// |Phi><Phi| on subsystems (0, i) with Phi = sum_k |kk>, identity elsewhere.
DenseOperator sigmaMatrix(int i, int n, int d);

/// U_P, moving the content of port i to port P(i).
DenseOperator permutationMatrix(Permutation const& p, int d);

DenseOperator swapMatrix(int i, int j, int n, int d);

DenseOperator rhoMatrix(int n, int d);

DenseOperator termToMatrix(DiagramTerm const& t, int d);

template <typename Scalar>
DenseOperator elementToMatrix(Element<Scalar> const& x, int d, auto&& toDouble) {
    int const n = x.ports();
    DenseOperator out = DenseOperator::Zero(hilbertDimension(n, d), hilbertDimension(n, d));
    for (auto const& [key, c] : x.terms()) {
        DenseOperator m = permutationMatrix(key.perm, d);
        if (key.attach) m = m * sigmaMatrix(*key.attach, n, d);
        out += toDouble(c) * m;
    }
    return out;
}

struct EigenGroup {
    double lambda = 0;
    int multiplicity = 0;
};

/// Nonzero eigenvalues of the dense rho, grouped within `groupTol`.
/// Eigenvalues below 1e-9 * lambda_max count as kernel.
std::vector<EigenGroup> rhoEigenvalues(int n, int d, double groupTol = 1e-6);

/// Pseudo-inverse square root on the support, cutoff 1e-9 * lambda_max.
DenseOperator inverseSqrtOnSupport(DenseOperator const& rho);

DenseOperator supportProjector(DenseOperator const& rho);

struct OracleResult {
    double successProbability = 0;
    /// Operator 2-norm of sum_i Pi_i minus the support projector of rho.
    double completenessError = 0;
    std::vector<EigenGroup> eigenvalues;
};

/// Builds rho and the pretty-good measurement explicitly and evaluates
/// S = tr(rho^-1/2 sigma_1 rho^-1/2 sigma_1) / d^n.
OracleResult oracleSuccessProbability(int n, int d);

/// Spectral norm of a symmetric matrix.
double operatorNorm(DenseOperator const& m);

}  // namespace pbt::oracle
