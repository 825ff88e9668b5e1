#include "telecloning/circuits/text_io.hpp"

#include <array>
#include <charconv>
#include <complex>
#include <optional>
#include <sstream>

namespace telecloning::circuits {

using sim::Control;
using sim::GateKind;
using sim::Matrix2c;
using sim::Polarity;

std::string dialect_name(Dialect d) { return d == Dialect::Qasm2Like ? "qasm" : "annotated"; }

Dialect parse_dialect(const std::string& text) {
    if (text == "qasm") return Dialect::Qasm2Like;
    if (text == "annotated") return Dialect::Annotated;
    throw std::invalid_argument("unknown circuit dialect '" + text + "'");
}

namespace {

constexpr const char* kQasmHeader = "OPENQASM 2.0;";
constexpr const char* kAnnotatedHeader = "ANNOTATED 1.0;";

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::string qubit_ref(std::size_t q) { return "q[" + std::to_string(q) + "]"; }

std::string gate_text(const GateOp& g) {
    std::string name;
    for (const auto& c : g.controls()) name += c.polarity == Polarity::One ? 'c' : 'o';
    name += sim::gate_name(g.kind());
    if (g.kind() == GateKind::RY || g.kind() == GateKind::RZ) {
        name += "(" + format_double(g.angle()) + ")";
    } else if (g.kind() == GateKind::Unitary) {
        const Matrix2c m = g.matrix();
        name += "(";
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                if (r + c > 0) name += ",";
                name += format_double(m(r, c).real()) + "," + format_double(m(r, c).imag());
            }
        }
        name += ")";
    }
    std::string operands;
    for (const auto& c : g.controls()) operands += qubit_ref(c.qubit) + ",";
    operands += qubit_ref(g.target());
    return name + " " + operands + ";";
}

std::string op_text(const Operation& op) {
    if (const auto* g = std::get_if<GateOp>(&op)) return gate_text(*g);
    if (std::holds_alternative<Barrier>(op)) return "barrier q;";
    if (const auto* m = std::get_if<Measure>(&op)) {
        return "measure " + qubit_ref(m->qubit) + " -> c[" + std::to_string(m->clbit) + "];";
    }
    if (const auto* c = std::get_if<Conditional>(&op)) {
        return "if(c[" + std::to_string(c->clbit) + "]==1) " + gate_text(c->gate);
    }
    const auto& s = std::get<Swap>(op);
    return "swap " + qubit_ref(s.a) + "," + qubit_ref(s.b) + ";";
}

// --- parsing -------------------------------------------------------------

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw CircuitTextError("line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<std::size_t> parse_index(const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

// "x[12]" -> 12 for register letter x.
std::size_t parse_ref(const std::string& text, char reg, std::size_t line_no) {
    const std::string t = trim(text);
    if (t.size() < 4 || t[0] != reg || t[1] != '[' || t.back() != ']') fail(line_no, "expected " + std::string(1, reg) + "[k], got '" + t + "'");
    const auto v = parse_index(t.substr(2, t.size() - 3));
    if (!v) fail(line_no, "bad index in '" + t + "'");
    return *v;
}

double parse_number(const std::string& text, std::size_t line_no) {
    const std::string t = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) fail(line_no, "bad number '" + t + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

GateOp parse_gate(const std::string& stmt, std::size_t line_no) {
    const auto space = stmt.find(' ');
    if (space == std::string::npos) fail(line_no, "gate without operands");
    std::string head = stmt.substr(0, space);
    const std::string operands = stmt.substr(space + 1);

    std::vector<double> params;
    if (const auto open = head.find('('); open != std::string::npos) {
        if (head.back() != ')') fail(line_no, "unterminated parameter list");
        for (const auto& p : split(head.substr(open + 1, head.size() - open - 2), ',')) params.push_back(parse_number(p, line_no));
        head = head.substr(0, open);
    }
    std::vector<Polarity> pols;
    std::size_t k = 0;
    while (k < head.size() && (head[k] == 'c' || head[k] == 'o')) pols.push_back(head[k++] == 'c' ? Polarity::One : Polarity::Zero);
    const std::string base = head.substr(k);

    const auto refs = split(operands, ',');
    if (refs.size() != pols.size() + 1) fail(line_no, "operand count does not match '" + head + "'");
    std::vector<std::size_t> qs;
    for (const auto& r : refs) qs.push_back(parse_ref(r, 'q', line_no));
    const std::size_t target = qs.back();

    auto expect_params = [&](std::size_t n) {
        if (params.size() != n) fail(line_no, "gate '" + base + "' takes " + std::to_string(n) + " parameters");
    };
    std::optional<GateOp> g;
    try {
        if (base == "ry") {
            expect_params(1);
            g = GateOp::ry(target, params[0]);
        } else if (base == "rz") {
            expect_params(1);
            g = GateOp::rz(target, params[0]);
        } else if (base == "h" || base == "x" || base == "z") {
            expect_params(0);
            g = base == "h" ? GateOp::h(target) : base == "x" ? GateOp::x(target) : GateOp::z(target);
        } else if (base == "u") {
            expect_params(8);
            Matrix2c m;
            m << std::complex<double>(params[0], params[1]), std::complex<double>(params[2], params[3]),
                std::complex<double>(params[4], params[5]), std::complex<double>(params[6], params[7]);
            g = GateOp::unitary(target, m);
        } else {
            fail(line_no, "unknown gate '" + head + "'");
        }
        for (std::size_t j = 0; j < pols.size(); ++j) g = g->controlled(qs[j], pols[j]);
    } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
    }
    return *g;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::string export_circuit_text(const Circuit& circuit, Dialect dialect) {
    const bool annotated = dialect == Dialect::Annotated;
    if (!annotated && circuit.has_conditionals()) {
        throw CircuitTextError("classically conditioned gates need the annotated dialect");
    }
    std::ostringstream out;
    if (annotated) {
        out << kAnnotatedHeader << "\n";
    } else {
        out << kQasmHeader << "\n" << "include \"qelib1.inc\";\n";
    }
    out << "qreg q[" << circuit.n_qubits() << "];\n";
    if (circuit.n_clbits() > 0) out << "creg c[" << circuit.n_clbits() << "];\n";
    if (annotated) {
        for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
            if (const auto r = circuit.role(q)) out << "role " << qubit_ref(q) << " " << role_name(*r) << ";\n";
        }
    }
    const auto& marks = circuit.segments();
    std::size_t next_mark = 0;
    auto flush_marks = [&](std::size_t index) {
        while (next_mark < marks.size() && marks[next_mark].begin <= index) {
            if (annotated) out << "segment " << marks[next_mark].name << ";\n";
            ++next_mark;
        }
    };
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        flush_marks(i);
        out << op_text(circuit.ops()[i]) << "\n";
    }
    flush_marks(circuit.ops().size());
    return out.str();
}

Circuit parse_circuit_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::optional<bool> annotated;
    std::optional<std::size_t> n_qubits, n_clbits;
    std::optional<Circuit> circuit;

    auto ensure_circuit = [&]() -> Circuit& {
        if (!circuit) {
            if (!n_qubits) fail(line_no, "qreg must come before any operation");
            circuit.emplace(*n_qubits, n_clbits.value_or(0));
        }
        return *circuit;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || starts_with(line, "//")) continue;
        if (!annotated) {
            if (line == kQasmHeader) {
                annotated = false;
            } else if (line == kAnnotatedHeader) {
                annotated = true;
            } else {
                fail(line_no, "missing dialect header");
            }
            continue;
        }
        if (line.back() != ';') fail(line_no, "statement must end with ';'");
        const std::string stmt = trim(line.substr(0, line.size() - 1));

        try {
            if (stmt == "include \"qelib1.inc\"") {
                continue;
            } else if (starts_with(stmt, "qreg ")) {
                if (circuit || n_qubits) fail(line_no, "duplicate or late qreg");
                n_qubits = parse_ref(stmt.substr(5), 'q', line_no);
            } else if (starts_with(stmt, "creg ")) {
                if (circuit || n_clbits) fail(line_no, "duplicate or late creg");
                n_clbits = parse_ref(stmt.substr(5), 'c', line_no);
            } else if (starts_with(stmt, "role ")) {
                if (!*annotated) fail(line_no, "role lines need the annotated dialect");
                const auto parts = split(stmt.substr(5), ' ');
                if (parts.size() != 2) fail(line_no, "role needs a qubit and a name");
                ensure_circuit().set_role(parse_ref(parts[0], 'q', line_no), role_from_name(parts[1]));
            } else if (starts_with(stmt, "segment ")) {
                if (!*annotated) fail(line_no, "segment lines need the annotated dialect");
                ensure_circuit().begin_segment(trim(stmt.substr(8)));
            } else if (stmt == "barrier q") {
                ensure_circuit().barrier();
            } else if (starts_with(stmt, "measure ")) {
                const auto arrow = stmt.find("->");
                if (arrow == std::string::npos) fail(line_no, "measure needs '->'");
                ensure_circuit().measure(parse_ref(stmt.substr(8, arrow - 8), 'q', line_no),
                                         parse_ref(stmt.substr(arrow + 2), 'c', line_no));
            } else if (starts_with(stmt, "swap ")) {
                const auto refs = split(stmt.substr(5), ',');
                if (refs.size() != 2) fail(line_no, "swap needs two qubits");
                ensure_circuit().swap(parse_ref(refs[0], 'q', line_no), parse_ref(refs[1], 'q', line_no));
            } else if (starts_with(stmt, "if(")) {
                if (!*annotated) fail(line_no, "conditionals need the annotated dialect");
                const auto close = stmt.find(')');
                const std::string cond = stmt.substr(3, close == std::string::npos ? 0 : close - 3);
                if (close == std::string::npos || cond.size() < 4 || cond.substr(cond.size() - 3) != "==1") {
                    fail(line_no, "conditions must read if(c[k]==1)");
                }
                const std::size_t clbit = parse_ref(cond.substr(0, cond.size() - 3), 'c', line_no);
                ensure_circuit().conditional(clbit, parse_gate(trim(stmt.substr(close + 1)), line_no));
            } else {
                ensure_circuit().add(parse_gate(stmt, line_no));
            }
        } catch (const CircuitTextError&) {
            throw;
        } catch (const std::exception& e) {
            fail(line_no, e.what());
        }
    }
    if (!annotated) throw CircuitTextError("empty circuit text");
    return ensure_circuit();
}

}  // namespace telecloning::circuits
