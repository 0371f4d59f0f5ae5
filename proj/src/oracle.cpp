#include "pbt/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace pbt::oracle {

namespace {

// Digit of subsystem s (0..n) in basis index `index`; subsystem 0 is most significant.
int digit(long index, int s, int n, int d) {
    for (int k = n; k > s; --k) index /= d;
    return static_cast<int>(index % d);
}

long compose(std::vector<int> const& digits, int d) {
    long index = 0;
    for (int v : digits) index = index * d + v;
    return index;
}

Eigen::SelfAdjointEigenSolver<DenseOperator> decompose(DenseOperator const& rho) {
    if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw PsdViolation("oracle rho is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(rho);
    if (solver.info() != Eigen::Success) throw ClaimViolation("dense eigendecomposition failed");
    return solver;
}

DenseOperator spectralFunction(DenseOperator const& rho, double (*fn)(double)) {
    auto const solver = decompose(rho);
    auto const& values = solver.eigenvalues();
    double const top = values.maxCoeff();
    if (values.minCoeff() < -1e-10 * std::max(1.0, top)) throw PsdViolation("oracle rho has a negative eigenvalue");
    Eigen::VectorXd mapped(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        mapped(k) = values(k) > 1e-9 * top ? fn(values(k)) : 0.0;
    }
    auto const& vectors = solver.eigenvectors();
    return vectors * mapped.asDiagonal() * vectors.transpose();
}

}  // namespace

long hilbertDimension(int n, int d) {
    if (n < 1 || d < 1) throw ValidationError("oracle needs n >= 1 and d >= 1");
    long dim = 1;
    for (int k = 0; k <= n; ++k) {
        dim *= d;
        if (dim > kMaxDimension) {
            throw ValidationError("oracle size cap exceeded: d^(n+1) > " + std::to_string(kMaxDimension));
        }
    }
    return dim;
}

DenseOperator sigmaMatrix(int i, int n, int d) {
    long const dim = hilbertDimension(n, d);
    if (i < 1 || i > n) throw ValidationError("sigma index out of range");
    DenseOperator m = DenseOperator::Zero(dim, dim);
    // <x|sigma_i|y> = [x_0 = x_i][y_0 = y_i] prod_{k != 0,i} [x_k = y_k]
    std::vector<int> digits(static_cast<std::size_t>(n) + 1);
    for (long col = 0; col < dim; ++col) {
        for (int s = 0; s <= n; ++s) digits[static_cast<std::size_t>(s)] = digit(col, s, n, d);
        if (digits[0] != digits[static_cast<std::size_t>(i)]) continue;
        for (int k = 0; k < d; ++k) {
            auto row = digits;
            row[0] = k;
            row[static_cast<std::size_t>(i)] = k;
            m(compose(row, d), col) = 1.0;
        }
    }
    return m;
}

DenseOperator permutationMatrix(Permutation const& p, int d) {
    int const n = p.size();
    long const dim = hilbertDimension(n, d);
    DenseOperator m = DenseOperator::Zero(dim, dim);
    std::vector<int> in(static_cast<std::size_t>(n) + 1);
    for (long col = 0; col < dim; ++col) {
        for (int s = 0; s <= n; ++s) in[static_cast<std::size_t>(s)] = digit(col, s, n, d);
        auto out = in;
        for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(p(i))] = in[static_cast<std::size_t>(i)];
        m(compose(out, d), col) = 1.0;
    }
    return m;
}

DenseOperator swapMatrix(int i, int j, int n, int d) {
    return permutationMatrix(Permutation::transposition(n, i, j), d);
}

DenseOperator rhoMatrix(int n, int d) {
    long const dim = hilbertDimension(n, d);
    DenseOperator rho = DenseOperator::Zero(dim, dim);
    for (int i = 1; i <= n; ++i) rho += sigmaMatrix(i, n, d);
    return rho;
}

DenseOperator termToMatrix(DiagramTerm const& t, int d) {
    int const n = t.key.ports();
    DenseOperator m = permutationMatrix(t.key.perm, d);
    if (t.key.attach) m = m * sigmaMatrix(*t.key.attach, n, d);
    return t.coeff.convert_to<double>() * std::pow(static_cast<double>(d), t.dPower) * m;
}

std::vector<EigenGroup> rhoEigenvalues(int n, int d, double groupTol) {
    auto const solver = decompose(rhoMatrix(n, d));
    auto const& values = solver.eigenvalues();  // ascending
    double const top = values.maxCoeff();
    std::vector<EigenGroup> groups;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        double const v = values(k);
        if (v < -1e-10 * std::max(1.0, top)) throw PsdViolation("oracle rho has a negative eigenvalue");
        if (v <= 1e-9 * top) continue;
        if (!groups.empty() && std::abs(groups.back().lambda - v) <= groupTol) {
            auto& g = groups.back();
            g.lambda = (g.lambda * g.multiplicity + v) / (g.multiplicity + 1);
            ++g.multiplicity;
        } else {
            groups.push_back({v, 1});
        }
    }
    return groups;
}

DenseOperator inverseSqrtOnSupport(DenseOperator const& rho) {
    return spectralFunction(rho, [](double v) { return 1.0 / std::sqrt(v); });
}

DenseOperator supportProjector(DenseOperator const& rho) {
    return spectralFunction(rho, [](double) { return 1.0; });
}

double operatorNorm(DenseOperator const& m) {
    if (m.size() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

OracleResult oracleSuccessProbability(int n, int d) {
    DenseOperator const rho = rhoMatrix(n, d);
    DenseOperator const x = inverseSqrtOnSupport(rho);

    OracleResult result;
    DenseOperator povmSum = DenseOperator::Zero(rho.rows(), rho.cols());
    for (int i = 1; i <= n; ++i) {
        DenseOperator const s = sigmaMatrix(i, n, d);
        DenseOperator const pi = x * s * x;
        povmSum += pi;
        if (i == 1) {
            result.successProbability = (pi * s).trace() / std::pow(static_cast<double>(d), n);
        }
    }
    result.completenessError = operatorNorm(povmSum - supportProjector(rho));
    result.eigenvalues = rhoEigenvalues(n, d);
    return result;
}

}  // namespace pbt::oracle
