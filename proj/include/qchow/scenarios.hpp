#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qchow/equiv.hpp"
#include "qchow/zideal.hpp"

namespace qchow {

struct VerdictRow {
    std::string label;
    std::string value;   // canonical text
    std::string target;  // ideal name, or a polynomial for equality rows
    bool member = false;
    bool expected_negative = false;
    std::optional<MembershipCertificate> certificate;

    bool pass() const { return member != expected_negative; }
};

struct Verdict {
    std::string id;
    std::vector<VerdictRow> rows;
    std::vector<std::string> notes;
    bool integrity_ok = true;
    std::string integrity_message;
    double seconds = 0;

    bool pass() const;
};

struct RunOptions {
    unsigned jobs = 1;
};

// Generators of the ideal the classes are tested against.
const IdealBasis& alpha_ideal();
const SparsePoly& delta13();
const IdealBasis& alpha_delta_ideal();

// Fixed-point data for each pipeline.
std::vector<FixedPointTerm> alpha_terms(unsigned power);
std::vector<FixedPointTerm> square_terms(unsigned power);
std::vector<FixedPointTerm> line_cubic_terms(unsigned power);
std::vector<FixedPointTerm> binodal_terms(unsigned i, unsigned j);
std::vector<FixedPointTerm> binodal_base_terms();  // numerator 1
std::vector<FixedPointTerm> trinodal_terms(const std::array<unsigned, 7>& tuple);

// tau^a sigma^b with |b| <= 2, a <= 2, in a fixed order.
struct Hilb2W2Generator {
    unsigned a;
    std::array<unsigned, 4> b;
    std::string label() const;
};
std::vector<Hilb2W2Generator> hilb2w2_generators();
std::vector<FixedPointTerm> hilb2w2_terms(const Hilb2W2Generator& g);

// Tuples with i1 + 2 i2 + i3 + 2 i4 + 3 i5 + 2 i6 + 3 i7 <= 6.
std::vector<std::array<unsigned, 7>> eta_tuples();
std::string eta_label(const std::array<unsigned, 7>& t);

struct WeightedPartition {
    std::vector<int> mu;  // ascending
    std::vector<int> m;   // descending within equal weights
    std::string label() const;
    friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
};

std::vector<WeightedPartition> weighted_partitions(int d);
// Codimension in P(W_d); the one-part partition {d} stands for the
// irreducible singular curves and has codimension 1.
int codim(const WeightedPartition& wp, int d);
// Closure relations among the strata of singular quartics, as pairs of
// labels (larger stratum, smaller stratum).
const std::vector<std::pair<std::string, std::string>>& quartic_strata_edges();
// Codimension printed next to each node of the quartic digraph.
const std::vector<std::pair<std::string, int>>& quartic_strata_codims();

Verdict scenario_alpha(const RunOptions& opt = {});
Verdict scenario_square(const RunOptions& opt = {});
Verdict scenario_hilb2w2(const RunOptions& opt = {});
Verdict scenario_line_cubic(const RunOptions& opt = {});
Verdict scenario_binodal(const RunOptions& opt = {});
Verdict scenario_trinodal(const RunOptions& opt = {});
Verdict scenario_independence(const RunOptions& opt = {});
Verdict scenario_presentation(const RunOptions& opt = {});
Verdict scenario_strata(const RunOptions& opt = {});

const std::vector<std::string>& scenario_ids();  // run order
bool scenario_is_gated(const std::string& id);
// Runs the selected scenarios in the canonical order.  Gated scenarios are
// skipped with a failing row unless p4 lies in the alpha ideal.
std::vector<Verdict> run_scenarios(const std::vector<std::string>& ids, const RunOptions& opt);

}  // namespace qchow
