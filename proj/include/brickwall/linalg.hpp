// Copyright 2026 The Brickwall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace brickwall {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The dimensions in this project stay below
/// a few hundred, so the naive operations are plenty.
struct CMatrix {
    size_t rows = 0, cols = 0;
    std::vector<cplx> data;

    CMatrix() = default;
    CMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {
    }

    cplx &at(size_t r, size_t c) {
        return data[r * cols + c];
    }
    const cplx &at(size_t r, size_t c) const {
        return data[r * cols + c];
    }

    static CMatrix identity(size_t n) {
        CMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.at(i, i) = 1.0;
        }
        return m;
    }

    CMatrix adjoint() const {
        CMatrix m(cols, rows);
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                m.at(c, r) = std::conj(at(r, c));
            }
        }
        return m;
    }

    CMatrix operator*(const CMatrix &other) const {
        if (cols != other.rows) {
            throw std::invalid_argument("matrix dimensions do not match");
        }
        CMatrix m(rows, other.cols);
        for (size_t r = 0; r < rows; r++) {
            for (size_t k = 0; k < cols; k++) {
                cplx v = at(r, k);
                if (v == 0.0) {
                    continue;
                }
                for (size_t c = 0; c < other.cols; c++) {
                    m.at(r, c) += v * other.at(k, c);
                }
            }
        }
        return m;
    }

    double max_abs_diff(const CMatrix &other) const {
        double worst = 0;
        for (size_t i = 0; i < data.size(); i++) {
            worst = std::max(worst, std::abs(data[i] - other.data[i]));
        }
        return worst;
    }
};

/// <a|b> with the conjugate on the left argument.
inline cplx inner(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    cplx s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

inline double norm_of(const std::vector<cplx> &v) {
    double s = 0;
    for (const cplx &x : v) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

/// Modified Gram-Schmidt with a residual-norm rank cutoff: generators whose
/// residual drops to `cutoff` or below are dependent and get dropped.
inline std::vector<std::vector<cplx>> modified_gram_schmidt(
    const std::vector<std::vector<cplx>> &generators, double cutoff) {
    std::vector<std::vector<cplx>> basis;
    for (const auto &g : generators) {
        std::vector<cplx> residual = g;
        for (const auto &e : basis) {
            cplx coeff = inner(e, residual);
            for (size_t i = 0; i < residual.size(); i++) {
                residual[i] -= coeff * e[i];
            }
        }
        double len = norm_of(residual);
        if (len <= cutoff) {
            continue;
        }
        for (cplx &x : residual) {
            x /= len;
        }
        basis.push_back(std::move(residual));
    }
    return basis;
}

/// The orthogonal projector onto the span of an orthonormal basis.
inline CMatrix projector_onto(const std::vector<std::vector<cplx>> &basis, size_t dim) {
    CMatrix p(dim, dim);
    for (const auto &e : basis) {
        for (size_t i = 0; i < dim; i++) {
            for (size_t j = 0; j < dim; j++) {
                p.at(i, j) += e[i] * std::conj(e[j]);
            }
        }
    }
    return p;
}

inline double unitarity_deviation(const CMatrix &u) {
    return (u.adjoint() * u).max_abs_diff(CMatrix::identity(u.cols));
}

/// Haar-ish random unitary: Gram-Schmidt over the columns of a random complex
/// Gaussian matrix.
inline CMatrix random_unitary(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<cplx>> columns(n, std::vector<cplx>(n));
    for (auto &col : columns) {
        for (cplx &x : col) {
            x = {gauss(rng), gauss(rng)};
        }
    }
    auto basis = modified_gram_schmidt(columns, 1e-9);
    if (basis.size() != n) {
        throw std::runtime_error("random matrix was singular; try another seed");
    }
    CMatrix u(n, n);
    for (size_t c = 0; c < n; c++) {
        for (size_t r = 0; r < n; r++) {
            u.at(r, c) = basis[c][r];
        }
    }
    return u;
}

}  // namespace brickwall
