#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "telecloning/sim/gate.hpp"

namespace telecloning::circuits {

using sim::GateOp;

enum class QubitRole { Message, Ancilla, Port, Clone };

std::string role_name(QubitRole role);
QubitRole role_from_name(const std::string& name);

struct Barrier {
    bool operator==(const Barrier&) const = default;
};

struct Measure {
    std::size_t qubit = 0;
    std::size_t clbit = 0;
    bool operator==(const Measure&) const = default;
};

/// Gate applied only when `clbit` currently holds 1.
struct Conditional {
    std::size_t clbit = 0;
    GateOp gate;
    bool operator==(const Conditional&) const = default;
};

/// Adjacent swap inserted by routing; worth three CNOTs.
struct Swap {
    std::size_t a = 0;
    std::size_t b = 0;
    bool operator==(const Swap&) const = default;
};

using Operation = std::variant<GateOp, Barrier, Measure, Conditional, Swap>;

/// Named stretch of ops starting at `begin`, ending where the next one starts.
struct SegmentMark {
    std::size_t begin = 0;
    std::string name;
    bool operator==(const SegmentMark&) const = default;
};

/**
 * Ordered op list over indexed qubits and classical bits.
 *
 * Every add validates indices, and a conditional must read a clbit that an
 * earlier measure wrote. Builders produce a Circuit once and then share it
 * read-only.
 */
class Circuit {
public:
    explicit Circuit(std::size_t n_qubits, std::size_t n_clbits = 0);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t n_clbits() const noexcept { return n_clbits_; }
    const std::vector<Operation>& ops() const noexcept { return ops_; }
    const std::vector<SegmentMark>& segments() const noexcept { return segments_; }

    void set_role(std::size_t qubit, QubitRole role);
    std::optional<QubitRole> role(std::size_t qubit) const;
    std::vector<std::size_t> qubits_with_role(QubitRole role) const;

    Circuit& add(const GateOp& gate);
    Circuit& barrier();
    Circuit& measure(std::size_t qubit, std::size_t clbit);
    Circuit& conditional(std::size_t clbit, const GateOp& gate);
    Circuit& swap(std::size_t a, std::size_t b);
    Circuit& push(const Operation& op);

    /// Starts a named segment at the current end of the op list.
    Circuit& begin_segment(std::string name);

    /// Appends a clbit-free segment; its qubit q lands on qubit_map[q].
    /// Segment marks are carried over.
    Circuit& append(const Circuit& segment, const std::vector<std::size_t>& qubit_map);

    std::size_t barrier_count() const;
    std::size_t conditional_count() const;
    bool has_conditionals() const { return conditional_count() > 0; }

    /// Index range [begin, end) of the first segment with this name.
    std::optional<std::pair<std::size_t, std::size_t>> segment_range(const std::string& name) const;

    bool operator==(const Circuit&) const = default;

private:
    void check_qubit(std::size_t q) const;
    void check_clbit(std::size_t c) const;

    std::size_t n_qubits_;
    std::size_t n_clbits_;
    std::vector<Operation> ops_;
    std::vector<std::optional<QubitRole>> roles_;
    std::vector<SegmentMark> segments_;
    std::vector<bool> written_;
};

/// Qubits an op acts on (targets, controls, swap ends, measured qubit).
std::vector<std::size_t> op_qubits(const Operation& op);

}  // namespace telecloning::circuits
