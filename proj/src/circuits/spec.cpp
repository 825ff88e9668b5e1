#include "telecloning/circuits/spec.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace telecloning::circuits {

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::FeedForward: return "feedforward";
        case Mode::Deferred: return "deferred";
        case Mode::PostSelect: return "postselect";
    }
    return "?";
}

Mode parse_mode(const std::string& text) {
    if (text == "feedforward") return Mode::FeedForward;
    if (text == "deferred") return Mode::Deferred;
    if (text == "postselect") return Mode::PostSelect;
    throw std::invalid_argument("unknown mode '" + text + "'");
}

std::string connectivity_name(Connectivity c) { return c == Connectivity::LNN ? "lnn" : "full"; }

Connectivity parse_connectivity(const std::string& text) {
    if (text == "lnn") return Connectivity::LNN;
    if (text == "full") return Connectivity::Full;
    throw std::invalid_argument("unknown connectivity '" + text + "'");
}

std::string basis_name(TomoBasis b) {
    switch (b) {
        case TomoBasis::None: return "none";
        case TomoBasis::X: return "x";
        case TomoBasis::Y: return "y";
        case TomoBasis::Z: return "z";
    }
    return "?";
}

std::string variant_label(unsigned variant) {
    if (variant > 3) throw std::invalid_argument("variant must be in [0, 3]");
    std::string s(2, '0');
    if (variant & 2U) s[0] = '1';
    if (variant & 1U) s[1] = '1';
    return s;
}

unsigned parse_variant(const std::string& label) {
    if (label.size() != 2 || (label[0] != '0' && label[0] != '1') || (label[1] != '0' && label[1] != '1')) {
        throw std::invalid_argument("variant label must be two bits, got '" + label + "'");
    }
    return variant_from_bits(label[1] == '1', label[0] == '1');
}

unsigned variant_from_bits(unsigned message_bit, unsigned port_bit) {
    return (message_bit & 1U) | ((port_bit & 1U) << 1);
}

void TelecloningSpec::validate() const {
    if (m_clones < 2) throw std::invalid_argument("need at least 2 clones");
    if (!with_ancilla && m_clones > 3) {
        throw std::invalid_argument("ancilla-free telecloning is only available for 2 or 3 clones");
    }
    if (m_clones > 7) throw std::invalid_argument("more than 7 clones exceeds the dense simulator");
    if (variant > 3) throw std::invalid_argument("post-selection variant must be in [0, 3]");
}

std::string TelecloningSpec::circuit_id() const {
    if (!with_ancilla) return m_clones == 2 ? "pcc" : m_clones == 3 ? "pccc" : "invalid";
    if (m_clones == 2) return "apcc";
    if (m_clones == 3) return "aapccc";
    return "ancilla:" + std::to_string(m_clones);
}

TelecloningSpec parse_circuit_id(const std::string& id) {
    TelecloningSpec spec;
    if (id == "pcc") {
        spec.m_clones = 2;
    } else if (id == "pccc") {
        spec.m_clones = 3;
    } else if (id == "apcc") {
        spec.m_clones = 2;
        spec.with_ancilla = true;
    } else if (id == "aapccc") {
        spec.m_clones = 3;
        spec.with_ancilla = true;
    } else if (id.rfind("ancilla:", 0) == 0) {
        const std::string digits = id.substr(8);
        int m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw std::invalid_argument("bad clone count in '" + id + "'");
        }
        spec.m_clones = m;
        spec.with_ancilla = true;
    } else {
        throw std::invalid_argument("unknown circuit id '" + id + "'");
    }
    spec.validate();
    return spec;
}

void MessageSpec::validate() const {
    constexpr double slack = 1e-12;
    if (!(theta_y >= -slack && theta_y <= std::numbers::pi + slack)) {
        throw std::invalid_argument("theta_y must be in [0, pi]");
    }
    if (!(theta_z >= -slack && theta_z <= 2 * std::numbers::pi + slack)) {
        throw std::invalid_argument("theta_z must be in [0, 2 pi]");
    }
}

Layout layout_for(const TelecloningSpec& spec) {
    spec.validate();
    Layout l;
    const auto m = static_cast<std::size_t>(spec.m_clones);
    std::size_t next = 1;
    if (spec.with_ancilla) {
        for (std::size_t j = 0; j + 1 < m; ++j) l.ancillas.push_back(next++);
    }
    l.port = next++;
    for (std::size_t k = 0; k < m; ++k) l.clones.push_back(next++);
    l.n_qubits = next;
    return l;
}

}  // namespace telecloning::circuits
