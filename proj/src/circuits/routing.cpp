#include "telecloning/circuits/routing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace telecloning::circuits {

bool LineCoupling::adjacent(std::size_t a, std::size_t b) const {
    if (a + 1 == b || b + 1 == a) return true;
    return std::any_of(extra_edges.begin(), extra_edges.end(), [&](const auto& e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

void append_routed(Circuit& out, const std::vector<GateOp>& gates, const LineCoupling& coupling) {
    const std::size_t n = out.n_qubits();
    std::vector<std::size_t> pos(n), at(n);  // logical -> physical, physical -> logical
    std::iota(pos.begin(), pos.end(), 0);
    std::iota(at.begin(), at.end(), 0);

    auto swap_phys = [&](std::size_t p, std::size_t q) {
        out.swap(p, q);
        std::swap(at[p], at[q]);
        pos[at[p]] = p;
        pos[at[q]] = q;
    };

    for (const auto& g : gates) {
        if (g.controls().empty()) {
            out.add(g.remapped(pos));
            continue;
        }
        if (g.controls().size() != 1) throw std::invalid_argument("routing expects lowered gates");
        const std::size_t c = g.controls()[0].qubit, t = g.target();
        while (!coupling.adjacent(pos[c], pos[t])) {
            const std::size_t pc = pos[c];
            swap_phys(pc, pc < pos[t] ? pc + 1 : pc - 1);
        }
        out.add(g.remapped(pos));
    }
    // Bubble the placement back to the identity.
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t cur = pos[p];
        while (cur > p) {
            swap_phys(cur - 1, cur);
            --cur;
        }
    }
}

}  // namespace telecloning::circuits
