#include "bdd/kernelizer.hpp"

#include <sstream>

#include "bdd/solver.hpp"
#include "bdd/star_packing.hpp"

namespace bdd {

long long kernel_constant(int d) {
    if (d < 0) {
        throw std::invalid_argument("kernel_constant: d must be non-negative");
    }
    long long dd = d;
    return dd * dd * dd + 4 * dd * dd + 6 * dd + 4;
}

KernelResult compute_ab(const Graph& g, int d, std::vector<ExtremalTrace>* traces) {
    if (d < 0) {
        throw std::invalid_argument("compute_ab: d must be non-negative");
    }
    KernelResult result;
    result.d = d;
    result.constant = kernel_constant(d);
    Graph current = g;
    const unsigned long long factor =
        static_cast<unsigned long long>(d + 1) * static_cast<unsigned long long>(d + 1);
    while (true) {
        WitnessPartition split = compute_witness(current, d);
        if (split.residual.size() <= factor * split.witness.size()) {
            break;
        }
        auto [pair, trace] = find_extremal(current, split.witness, split.residual, d);
        if (traces != nullptr) {
            traces->push_back(std::move(trace));
        }
        VertexSet removed = pair.forced;
        removed.insert(pair.discardable.begin(), pair.discardable.end());
        if (removed.empty()) {
            throw std::logic_error("compute_ab: extraction removed no vertex");
        }
        result.forced.insert(pair.forced.begin(), pair.forced.end());
        result.discardable.insert(pair.discardable.begin(), pair.discardable.end());
        current = remove_vertices(current, removed);
        ++result.rounds;
    }
    result.reduced = std::move(current);
    return result;
}

bool TheoremReport::all_pass() const {
    return property1 == PropertyStatus::pass && property2 == PropertyStatus::pass &&
           property3 == PropertyStatus::pass;
}

bool TheoremReport::any_fail() const {
    return property1 == PropertyStatus::fail || property2 == PropertyStatus::fail ||
           property3 == PropertyStatus::fail;
}

const char* to_string(PropertyStatus status) {
    switch (status) {
        case PropertyStatus::pass:
            return "pass";
        case PropertyStatus::fail:
            return "fail";
        default:
            return "unverified";
    }
}

TheoremReport verify_theorem(const Graph& g, int d, const KernelResult& result,
                             std::size_t oracle_limit) {
    if (result.d != d) {
        throw std::invalid_argument("verify_theorem: result was produced for a different d");
    }
    TheoremReport report;

    bool have_reduced_opt = false;
    VertexSet reduced_opt;
    try {
        reduced_opt = brute_force_min_bdd(result.reduced, d, oracle_limit);
        have_reduced_opt = true;
    } catch (const ScaleLimitError&) {
    }
    bool have_full_opt = false;
    VertexSet full_opt;
    try {
        full_opt = brute_force_min_bdd(g, d, oracle_limit);
        have_full_opt = true;
    } catch (const ScaleLimitError&) {
    }

    if (have_reduced_opt) {
        VertexSet lifted = reduced_opt;
        lifted.insert(result.forced.begin(), result.forced.end());
        report.property1 =
            is_bdd_set(g, lifted, d) ? PropertyStatus::pass : PropertyStatus::fail;
    }
    if (have_reduced_opt && have_full_opt) {
        report.property2 =
            full_opt.size() == result.forced.size() + reduced_opt.size()
                ? PropertyStatus::pass
                : PropertyStatus::fail;
    }
    if (result.reduced.empty()) {
        report.property3 = PropertyStatus::pass;
    } else if (have_reduced_opt) {
        report.property3 = static_cast<long long>(result.reduced.vertex_count()) <=
                                   result.constant * static_cast<long long>(reduced_opt.size())
                               ? PropertyStatus::pass
                               : PropertyStatus::fail;
    }
    return report;
}

namespace {

void write_id_list(std::ostream& out, const char* label, const VertexSet& s) {
    out << label << ':';
    for (int v : s) {
        out << ' ' << v;
    }
    out << '\n';
}

}  // namespace

std::string serialize_kernel_result(const KernelResult& result) {
    std::ostringstream out;
    write_id_list(out, "A", result.forced);
    write_id_list(out, "B", result.discardable);
    out << "reduced:\n";
    VertexSet isolated;
    for (const auto& [v, nbrs] : result.reduced.adjacency()) {
        if (nbrs.empty()) {
            isolated.insert(isolated.end(), v);
        }
    }
    if (!isolated.empty()) {
        write_id_list(out, "# isolated", isolated);
    }
    serialize_graph(result.reduced, out, GraphFormat::edge_list);
    out << "constant: " << result.constant << '\n';
    out << "rounds: " << result.rounds << '\n';
    return out.str();
}

}  // namespace bdd
