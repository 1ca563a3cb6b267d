#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

// Induced edge sign: the product of the endpoint signs.
constexpr Sign induced_edge_sign(Sign a, Sign b) { return a == b ? Sign::Positive : Sign::Negative; }

// One sign per vertex of the graph it is evaluated against. Binding is by length only.
class SignedLabeling {
public:
    SignedLabeling() = default;
    explicit SignedLabeling(std::vector<Sign> signs) : signs_(std::move(signs)) {}
    SignedLabeling(std::size_t n, Sign fill) : signs_(n, fill) {}

    // Throws BadParameter unless every entry is +1 or -1.
    static SignedLabeling from_ints(std::span<const int> values);
    // Bit v of mask set means vertex v is +1.
    static SignedLabeling from_mask(std::uint64_t mask, std::size_t n);

    std::size_t size() const { return signs_.size(); }
    Sign operator[](VertexId v) const { return signs_[v]; }
    void set(VertexId v, Sign s) { signs_.at(v) = s; }

    std::span<const Sign> signs() const { return signs_; }
    std::vector<int> to_ints() const;
    auto begin() const { return signs_.begin(); }
    auto end() const { return signs_.end(); }

    friend bool operator==(const SignedLabeling&, const SignedLabeling&) = default;

private:
    std::vector<Sign> signs_;
};

SignedLabeling negate(const SignedLabeling& l);

struct CordialityReport {
    std::size_t v_pos = 0;
    std::size_t v_neg = 0;
    std::size_t e_pos = 0;
    std::size_t e_neg = 0;
    std::int64_t vertex_delta = 0; // v_neg - v_pos
    std::int64_t edge_delta = 0;   // e_neg - e_pos
    bool is_spc = false;

    friend bool operator==(const CordialityReport&, const CordialityReport&) = default;
};

// Both balance conditions: |vertex_delta| <= 1 and |edge_delta| <= 1.
constexpr bool spc_condition(std::int64_t vertex_delta, std::int64_t edge_delta) {
    return vertex_delta >= -1 && vertex_delta <= 1 && edge_delta >= -1 && edge_delta <= 1;
}

CordialityReport make_report(std::size_t v_pos, std::size_t v_neg, std::size_t e_pos, std::size_t e_neg);

// Throws LengthMismatch when l.size() != g.num_vertices().
CordialityReport evaluate(const Graph& g, const SignedLabeling& l);

// "v 9/9, e 12/12, SPC"
std::string summary(const CordialityReport& r);

} // namespace spc
