#include "avdeq/model.hpp"

namespace avdeq {

namespace {

IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows + b.rows, a.cols + b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
    for (long i = 0; i < b.rows; ++i)
        for (long j = 0; j < b.cols; ++j) r(a.rows + i, a.cols + j) = b(i, j);
    return r;
}

void validate(const VarietyModel& m) {
    if (m.dim < 1) fail("BadInput", "model dimension must be positive");
    if (m.ample.rows != 2 * m.dim || m.ample.cols != 2 * m.dim)
        fail("DimensionMismatch", "polarization must be 2n x 2n");
    if (!is_skew_symmetric(m.ample)) fail("NotSkew", "polarization must be skew-symmetric");
    if (pfaffian(m.ample) <= 0) fail("BadInput", "polarization must have positive Pfaffian");
}

}  // namespace

bool VarietyModel::principally_polarized() const { return pfaffian(ample) == 1; }

IntMat VarietyModel::y_base() const {
    RatMat yb = Rat(Int(level)) * inverse(ample);
    if (!is_integral(yb)) fail("BadInput", "level * ample^-1 is not integral in this model");
    return to_int(yb);
}

VarietyModel elliptic_power(long n) {
    VarietyModel m;
    m.kind = ModelKind::EllipticPower;
    m.dim = n;
    m.level = 1;
    m.ample = kron(IntMat::identity(n), symplectic_block());
    validate(m);
    return m;
}

VarietyModel polarized_scalar(long n_level) {
    if (n_level < 1) fail("BadInput", "level N must be positive");
    VarietyModel m;
    m.kind = ModelKind::PolarizedScalar;
    m.dim = 2;
    m.level = n_level;
    m.ample = block_diag(symplectic_block(), Int(n_level) * symplectic_block());
    validate(m);
    return m;
}

VarietyModel lattice_generic(IntMat ample) {
    VarietyModel m;
    m.kind = ModelKind::LatticeGeneric;
    m.dim = ample.rows / 2;
    m.level = 1;
    m.ample = std::move(ample);
    validate(m);
    return m;
}

VarietyModel product_model(const VarietyModel& a, const VarietyModel& b) {
    VarietyModel m;
    m.kind = ModelKind::LatticeGeneric;
    m.dim = a.dim + b.dim;
    m.level = 1;
    m.ample = block_diag(a.ample, b.ample);
    validate(m);
    return m;
}

}  // namespace avdeq
