#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace telecloning::sim {

using Matrix2c = Eigen::Matrix2cd;

enum class GateKind { RY, RZ, H, X, Z, Unitary };

/// Control fires on |1> (filled dot) or on |0> (open dot).
enum class Polarity { One, Zero };

struct Control {
    std::size_t qubit = 0;
    Polarity polarity = Polarity::One;

    bool operator==(const Control&) const = default;
};

/**
 * A single-target gate with any number of controls. A CNOT is an X with one
 * control; there is no separate kind for it.
 *
 * Immutable once built. Factories validate unitarity of generic matrices and
 * that controls never overlap the target.
 */
class GateOp {
public:
    static GateOp ry(std::size_t target, double angle);
    static GateOp rz(std::size_t target, double angle);
    static GateOp h(std::size_t target);
    static GateOp x(std::size_t target);
    static GateOp z(std::size_t target);
    static GateOp unitary(std::size_t target, const Matrix2c& matrix);
    static GateOp cnot(std::size_t control, std::size_t target);
    static GateOp cz(std::size_t control, std::size_t target);

    GateOp controlled(std::size_t qubit, Polarity polarity = Polarity::One) const;

    GateKind kind() const noexcept { return kind_; }
    double angle() const noexcept { return angle_; }
    std::size_t target() const noexcept { return target_; }
    const std::vector<Control>& controls() const noexcept { return controls_; }
    std::size_t arity() const noexcept { return 1 + controls_.size(); }
    std::size_t max_qubit() const noexcept;
    bool touches(std::size_t qubit) const noexcept;

    /// The 2x2 matrix acting on the target when all controls fire.
    Matrix2c matrix() const;

    bool is_cnot() const noexcept;
    bool is_parametric() const noexcept { return kind_ == GateKind::RY || kind_ == GateKind::RZ; }

    /// Same gate on relabelled qubits: qubit q becomes map[q].
    GateOp remapped(const std::vector<std::size_t>& map) const;

    bool operator==(const GateOp& other) const;

private:
    GateOp(GateKind kind, std::size_t target, double angle);

    GateKind kind_;
    std::size_t target_;
    double angle_ = 0.0;
    Matrix2c matrix_ = Matrix2c::Identity();  // only meaningful for Unitary
    std::vector<Control> controls_;
};

/// Lower-case mnemonic used by the text dialects ("ry", "x", "u", ...).
std::string gate_name(GateKind kind);

bool is_unitary(const Matrix2c& m, double tol = 1e-12);

}  // namespace telecloning::sim
