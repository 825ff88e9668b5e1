#include "telecloning/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace telecloning::sim {

GateOp::GateOp(GateKind kind, std::size_t target, double angle)
    : kind_(kind), target_(target), angle_(angle) {}

GateOp GateOp::ry(std::size_t target, double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("ry angle must be finite");
    return GateOp(GateKind::RY, target, angle);
}

GateOp GateOp::rz(std::size_t target, double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("rz angle must be finite");
    return GateOp(GateKind::RZ, target, angle);
}

GateOp GateOp::h(std::size_t target) { return GateOp(GateKind::H, target, 0.0); }
GateOp GateOp::x(std::size_t target) { return GateOp(GateKind::X, target, 0.0); }
GateOp GateOp::z(std::size_t target) { return GateOp(GateKind::Z, target, 0.0); }

GateOp GateOp::unitary(std::size_t target, const Matrix2c& matrix) {
    if (!is_unitary(matrix)) throw std::invalid_argument("generic gate matrix is not unitary");
    GateOp op(GateKind::Unitary, target, 0.0);
    op.matrix_ = matrix;
    return op;
}

GateOp GateOp::cnot(std::size_t control, std::size_t target) { return x(target).controlled(control); }
GateOp GateOp::cz(std::size_t control, std::size_t target) { return z(target).controlled(control); }

GateOp GateOp::controlled(std::size_t qubit, Polarity polarity) const {
    if (qubit == target_) throw std::invalid_argument("control coincides with target");
    for (const auto& c : controls_) {
        if (c.qubit == qubit) throw std::invalid_argument("duplicate control qubit");
    }
    GateOp out = *this;
    out.controls_.push_back({qubit, polarity});
    return out;
}

std::size_t GateOp::max_qubit() const noexcept {
    std::size_t m = target_;
    for (const auto& c : controls_) m = std::max(m, c.qubit);
    return m;
}

bool GateOp::touches(std::size_t qubit) const noexcept {
    if (qubit == target_) return true;
    return std::any_of(controls_.begin(), controls_.end(), [&](const Control& c) { return c.qubit == qubit; });
}

Matrix2c GateOp::matrix() const {
    using namespace std::complex_literals;
    Matrix2c m;
    switch (kind_) {
        case GateKind::RY: {
            const double c = std::cos(angle_ / 2), s = std::sin(angle_ / 2);
            m << c, -s, s, c;
            break;
        }
        case GateKind::RZ: {
            m << std::exp(-0.5i * angle_), 0, 0, std::exp(0.5i * angle_);
            break;
        }
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            m << r, r, r, -r;
            break;
        }
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::Z: m << 1, 0, 0, -1; break;
        case GateKind::Unitary: m = matrix_; break;
    }
    return m;
}

bool GateOp::is_cnot() const noexcept {
    return kind_ == GateKind::X && controls_.size() == 1 && controls_[0].polarity == Polarity::One;
}

GateOp GateOp::remapped(const std::vector<std::size_t>& map) const {
    auto at = [&](std::size_t q) {
        if (q >= map.size()) throw std::out_of_range("qubit map too short");
        return map[q];
    };
    GateOp out = *this;
    out.target_ = at(target_);
    for (auto& c : out.controls_) c.qubit = at(c.qubit);
    return out;
}

bool GateOp::operator==(const GateOp& other) const {
    return kind_ == other.kind_ && target_ == other.target_ && angle_ == other.angle_ &&
           controls_ == other.controls_ && (kind_ != GateKind::Unitary || matrix_ == other.matrix_);
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::Unitary: return "u";
    }
    return "?";
}

bool is_unitary(const Matrix2c& m, double tol) {
    return ((m.adjoint() * m) - Matrix2c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace telecloning::sim
