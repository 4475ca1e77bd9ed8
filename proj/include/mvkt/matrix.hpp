#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace Eigen {

// Exact integer scalar for Eigen dense types. All costs are rough; nothing
// here does approximate comparisons, so epsilon and dummy_precision are 0.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    using Literal = long;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace mvkt {

using Int = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;

// GF(2) values are stored one per byte; arithmetic is done explicitly mod 2.
using Bit = std::uint8_t;
using BitMatrix = Matrix<Bit>;
using BitVector = Vector<Bit>;

using Index = Eigen::Index;

/// Floor remainder in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_zero_matrix(const IntMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

inline bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/// [a | b] with matching row counts; tolerates zero-column operands.
inline IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

/// Block-diagonal matrix with `copies` copies of `block`, i.e. I_copies (x) block.
inline IntMatrix identity_kron(Index copies, const IntMatrix& block) {
    IntMatrix out = IntMatrix::Zero(copies * block.rows(), copies * block.cols());
    for (Index c = 0; c < copies; ++c)
        out.block(c * block.rows(), c * block.cols(), block.rows(), block.cols()) = block;
    return out;
}

}  // namespace mvkt
