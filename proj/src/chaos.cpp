#include "ieae/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ieae {

namespace {

// quantize num / 2^shift exactly; Round is half-to-even
std::uint64_t quantize_dyadic(std::uint64_t num, int shift, Quantizer q) {
    if (shift == 0) return num;
    const std::uint64_t fl = num >> shift;
    const std::uint64_t remainder = num & ((std::uint64_t(1) << shift) - 1);
    switch (q) {
        case Quantizer::Floor:
            return fl;
        case Quantizer::Ceil:
            return fl + (remainder != 0);
        case Quantizer::Round: {
            const std::uint64_t half = std::uint64_t(1) << (shift - 1);
            if (remainder > half || (remainder == half && (fl & 1))) return fl + 1;
            return fl;
        }
    }
    return fl;
}

struct MiniValue {
    double value;
    unsigned mant;  // mantissa field, for tie-to-even
};

std::vector<MiniValue> all_nonneg_values(const MiniFloatSpec& spec) {
    if (spec.exp_bits < 1 || spec.mant_bits < 1 || spec.exp_bits + spec.mant_bits + spec.sign_bits > 16)
        throw std::invalid_argument("minifloat spec out of range");
    std::vector<MiniValue> vals;
    const unsigned emax = (1u << spec.exp_bits) - 1;
    const unsigned mmax = (1u << spec.mant_bits) - 1;
    for (unsigned E = 0; E <= emax; ++E)
        for (unsigned M = 0; M <= mmax; ++M) {
            double v;
            if (E == 0)  // subnormal
                v = std::ldexp(static_cast<double>(M), 1 - spec.bias - spec.mant_bits);
            else
                v = std::ldexp(static_cast<double>((1u << spec.mant_bits) | M),
                               static_cast<int>(E) - spec.bias - spec.mant_bits);
            vals.push_back({v, M});
        }
    std::sort(vals.begin(), vals.end(),
              [](const MiniValue& a, const MiniValue& b) { return a.value < b.value; });
    vals.erase(std::unique(vals.begin(), vals.end(),
                           [](const MiniValue& a, const MiniValue& b) {
                               return a.value == b.value;
                           }),
               vals.end());
    return vals;
}

// round-to-nearest representable, ties to even mantissa field
double round_to_format(const std::vector<MiniValue>& vals, double x) {
    if (x <= vals.front().value) return vals.front().value;
    if (x >= vals.back().value) return vals.back().value;
    auto hi = std::lower_bound(vals.begin(), vals.end(), x,
                               [](const MiniValue& a, double v) { return a.value < v; });
    if (hi->value == x) return x;
    auto lo = hi - 1;
    const double dlo = x - lo->value;
    const double dhi = hi->value - x;
    if (dlo < dhi) return lo->value;
    if (dhi < dlo) return hi->value;
    return (lo->mant % 2 == 0) ? lo->value : hi->value;
}

}  // namespace

FunctionalGraph logistic_fixed_map(long mu_num, int mu_den_pow2, const FixedPointSpec& spec) {
    if (spec.e < 1 || spec.e > 16) throw std::invalid_argument("fixed-point precision out of range");
    if (mu_num < 0 || mu_den_pow2 < 0) throw std::invalid_argument("invalid mu");
    const std::uint64_t domain = std::uint64_t(1) << spec.e;  // nodes 0..2^e inclusive
    FunctionalGraph g;
    g.succ.resize(domain + 1);
    g.labels.resize(domain + 1);
    for (std::uint64_t i = 0; i <= domain; ++i) {
        // mu * (i/2^e) * (1 - i/2^e) * 2^e = mu_num * i * (2^e - i) / 2^(d+e)
        const std::uint64_t num = std::uint64_t(mu_num) * i * (domain - i);
        std::uint64_t s = quantize_dyadic(num, mu_den_pow2 + spec.e, spec.quantizer);
        if (s > domain) s = domain;
        g.succ[i] = static_cast<std::uint32_t>(s);
        g.labels[i] = std::to_string(i) + "/2^" + std::to_string(spec.e);
    }
    return g;
}

std::vector<double> minifloat_values(const MiniFloatSpec& spec) {
    std::vector<double> out;
    for (const auto& v : all_nonneg_values(spec))
        if (v.value <= 1.0) out.push_back(v.value);
    return out;
}

FunctionalGraph logistic_minifloat_map(double mu, const MiniFloatSpec& spec) {
    const auto vals = all_nonneg_values(spec);
    std::vector<double> nodes;
    for (const auto& v : vals)
        if (v.value <= 1.0) nodes.push_back(v.value);

    auto node_index = [&](double x) -> std::uint32_t {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
        if (it == nodes.end() || *it != x) it = nodes.end() - 1;  // clamp above 1
        return static_cast<std::uint32_t>(it - nodes.begin());
    };

    const double mu_r = round_to_format(vals, mu);
    FunctionalGraph g;
    g.succ.resize(nodes.size());
    g.labels.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        const double t1 = round_to_format(vals, mu_r * x);
        const double t2 = round_to_format(vals, 1.0 - x);
        double y = round_to_format(vals, t1 * t2);
        if (y > 1.0) y = 1.0;
        g.succ[i] = node_index(round_to_format(vals, y));
        std::ostringstream label;
        label << nodes[i];
        g.labels[i] = label.str();
    }
    return g;
}

FunctionalGraph arnold_mod_map(long a_prime, long b_prime, int e) {
    if (e < 1 || e > 12) throw std::invalid_argument("arnold precision out of range");
    const std::uint64_t mod = std::uint64_t(1) << e;
    const std::uint64_t ap = std::uint64_t(a_prime) % mod;
    const std::uint64_t bp = std::uint64_t(b_prime) % mod;
    const std::uint64_t diag = (1 + ap * bp) % mod;
    FunctionalGraph g;
    g.succ.resize(mod * mod);
    g.labels.resize(mod * mod);
    for (std::uint64_t y = 0; y < mod; ++y)
        for (std::uint64_t x = 0; x < mod; ++x) {
            const std::uint64_t nx = (x + ap * y) % mod;
            const std::uint64_t ny = (bp * x + diag * y) % mod;
            const std::uint64_t z = x + y * mod;
            g.succ[z] = static_cast<std::uint32_t>(nx + ny * mod);
            g.labels[z] = std::to_string(z);
        }
    return g;
}

ComponentCensus component_census(const FunctionalGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<long> comp(n, -1);
    std::vector<std::size_t> walk_id(n, 0);   // which walk last touched the node
    std::vector<std::size_t> walk_pos(n, 0);  // position within that walk
    std::vector<std::size_t> comp_cycle, comp_size;

    std::vector<std::uint32_t> path;
    for (std::size_t start = 0, walk = 1; start < n; ++start, ++walk) {
        if (comp[start] >= 0) continue;
        path.clear();
        std::uint32_t cur = static_cast<std::uint32_t>(start);
        while (comp[cur] < 0 && walk_id[cur] != walk) {
            walk_id[cur] = walk;
            walk_pos[cur] = path.size();
            path.push_back(cur);
            cur = graph.succ[cur];
        }
        long id;
        if (comp[cur] >= 0) {
            id = comp[cur];  // tail into a known component
        } else {
            // new cycle discovered within this walk
            id = static_cast<long>(comp_cycle.size());
            comp_cycle.push_back(path.size() - walk_pos[cur]);
            comp_size.push_back(0);
        }
        for (std::uint32_t node : path) comp[node] = id;
        comp_size[id] += path.size();
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (std::size_t id = 0; id < comp_cycle.size(); ++id)
        ++counts[{comp_cycle[id], comp_size[id]}];

    ComponentCensus census;
    census.node_total = n;
    for (const auto& [key, count] : counts)
        census.entries.push_back({key.first, key.second, count});
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) {
                  if (a.cycle_length != b.cycle_length) return a.cycle_length > b.cycle_length;
                  return a.component_size > b.component_size;
              });
    return census;
}

std::string export_dot(const FunctionalGraph& graph) {
    std::ostringstream out;
    out << "digraph G {\n";
    if (!graph.labels.empty())
        for (std::size_t i = 0; i < graph.size(); ++i)
            out << "  " << i << " [label=\"" << graph.labels[i] << "\"];\n";
    for (std::size_t i = 0; i < graph.size(); ++i)
        out << "  " << i << " -> " << graph.succ[i] << ";\n";
    out << "}\n";
    return out.str();
}

std::string census_text(const ComponentCensus& census) {
    std::ostringstream out;
    for (const auto& e : census.entries)
        out << e.cycle_length << " " << e.component_size << " " << e.count << "\n";
    return out.str();
}

Pow10Stats pow10_stats(int m) {
    if (m < 1 || m > 50) throw std::invalid_argument("pow10_stats: m out of [1, 50]");
    std::vector<std::uint32_t> limbs{1};
    for (int i = 0; i < m; ++i) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t v = std::uint64_t(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(v & 0xFFFFFFFFu);
            carry = v >> 32;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
    }
    int bits = static_cast<int>(limbs.size() - 1) * 32;
    for (std::uint32_t top = limbs.back(); top; top >>= 1) ++bits;
    int pop = 0;
    for (auto limb : limbs) pop += __builtin_popcount(limb);

    const int formula = static_cast<int>(std::ceil(m * std::log2(10.0)));
    if (formula != bits) throw std::logic_error("pow10 bit-length formula mismatch");
    return {bits, pop};
}

}  // namespace ieae
