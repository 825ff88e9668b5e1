#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace telecloning::circuits {

enum class Mode { FeedForward, Deferred, PostSelect };
enum class Connectivity { LNN, Full };
enum class TomoBasis { None, X, Y, Z };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& text);
std::string connectivity_name(Connectivity c);
Connectivity parse_connectivity(const std::string& text);
std::string basis_name(TomoBasis b);

/**
 * Post-selection variant as a 2-bit value: bit 0 is the message-qubit outcome
 * (gates Z), bit 1 the port outcome (gates X). Labels print the port bit
 * first, matching the |port, message> reading of the Bell states, so "0x"
 * means port outcome 0.
 */
std::string variant_label(unsigned variant);
unsigned parse_variant(const std::string& label);
unsigned variant_from_bits(unsigned message_bit, unsigned port_bit);

struct TelecloningSpec {
    int m_clones = 2;
    bool with_ancilla = false;
    Mode mode = Mode::FeedForward;
    unsigned variant = 0;  // postselect only
    Connectivity connectivity = Connectivity::Full;

    void validate() const;
    /// "pcc", "apcc", "pccc", "aapccc", or "ancilla:M" for M >= 4.
    std::string circuit_id() const;
};

/// Parses a circuit id; mode/variant/connectivity keep their defaults.
TelecloningSpec parse_circuit_id(const std::string& id);

struct MessageSpec {
    double theta_y = 0.0;
    double theta_z = 0.0;

    void validate() const;
};

/// Qubit assignment on the line: message, ancillas, port, clones.
struct Layout {
    std::size_t message = 0;
    std::vector<std::size_t> ancillas;
    std::size_t port = 0;
    std::vector<std::size_t> clones;
    std::size_t n_qubits = 0;
};

Layout layout_for(const TelecloningSpec& spec);

}  // namespace telecloning::circuits
