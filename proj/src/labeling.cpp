#include "spc/labeling.hpp"

#include "spc/errors.hpp"

namespace spc {

SignedLabeling SignedLabeling::from_ints(std::span<const int> values) {
    std::vector<Sign> signs;
    signs.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 1) {
            signs.push_back(Sign::Positive);
        } else if (values[i] == -1) {
            signs.push_back(Sign::Negative);
        } else {
            throw BadParameter("label at index " + std::to_string(i) + " is " +
                               std::to_string(values[i]) + ", expected 1 or -1");
        }
    }
    return SignedLabeling(std::move(signs));
}

SignedLabeling SignedLabeling::from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<Sign> signs(n);
    for (std::size_t v = 0; v < n; ++v) signs[v] = ((mask >> v) & 1U) ? Sign::Positive : Sign::Negative;
    return SignedLabeling(std::move(signs));
}

std::vector<int> SignedLabeling::to_ints() const {
    std::vector<int> out;
    out.reserve(signs_.size());
    for (Sign s : signs_) out.push_back(to_int(s));
    return out;
}

SignedLabeling negate(const SignedLabeling& l) {
    std::vector<Sign> flipped;
    flipped.reserve(l.size());
    for (Sign s : l) flipped.push_back(-s);
    return SignedLabeling(std::move(flipped));
}

CordialityReport make_report(std::size_t v_pos, std::size_t v_neg, std::size_t e_pos, std::size_t e_neg) {
    CordialityReport r;
    r.v_pos = v_pos;
    r.v_neg = v_neg;
    r.e_pos = e_pos;
    r.e_neg = e_neg;
    r.vertex_delta = static_cast<std::int64_t>(v_neg) - static_cast<std::int64_t>(v_pos);
    r.edge_delta = static_cast<std::int64_t>(e_neg) - static_cast<std::int64_t>(e_pos);
    r.is_spc = spc_condition(r.vertex_delta, r.edge_delta);
    return r;
}

CordialityReport evaluate(const Graph& g, const SignedLabeling& l) {
    if (l.size() != g.num_vertices()) {
        throw LengthMismatch("labeling has " + std::to_string(l.size()) + " signs but graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
    }
    std::size_t v_pos = 0;
    for (Sign s : l) v_pos += s == Sign::Positive;
    std::size_t e_pos = 0;
    for (const auto& e : g.edges()) e_pos += induced_edge_sign(l[e.first], l[e.second]) == Sign::Positive;
    return make_report(v_pos, l.size() - v_pos, e_pos, g.num_edges() - e_pos);
}

std::string summary(const CordialityReport& r) {
    return "v " + std::to_string(r.v_pos) + "/" + std::to_string(r.v_neg) + ", e " +
           std::to_string(r.e_pos) + "/" + std::to_string(r.e_neg) + ", " +
           (r.is_spc ? "SPC" : "not SPC");
}

} // namespace spc
