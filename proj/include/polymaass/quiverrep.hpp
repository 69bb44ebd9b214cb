#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymaass/linalg.hpp"

namespace pm {

enum class QuiverKind { Gelfand, Cyclic };
enum class NodeType { Star, Plus, Minus };

// Gelfand quiver:  V_- <-> V_* <-> V_+  with A_± : V_± -> V_*, B_± : V_* -> V_±.
// Cyclic quiver:   A_+ : V_- -> V_+,  A_- : V_+ -> V_-  (B_± and V_* unused).
struct QuiverRep {
    QuiverKind quiver = QuiverKind::Gelfand;
    int n_minus = 0;
    int n_star = 0;
    int n_plus = 0;
    RMatrix A_minus, B_minus, A_plus, B_plus;

    static QuiverRep zero(QuiverKind q, int n_minus, int n_star, int n_plus);
    int total_dim() const { return n_minus + n_star + n_plus; }
};

struct QuiverInvariants {
    std::vector<int> dims;     // (V_-, V_*, V_+) or (V_-, V_+)
    std::vector<int> degrees;  // nilpotency degrees of the loops, same order
};

struct CyclicClass {
    NodeType type = NodeType::Star;
    char which = 'a';
    int d = 0;
};

inline constexpr int kCyclicTrials = 32;

// Loop endomorphisms at each node, ordered like dims.
std::vector<RMatrix> loops(const QuiverRep& rep);
bool relation_holds(const QuiverRep& rep);
// Smallest e with m^e = 0; throws if m is not nilpotent.
int nilpotency_degree(const RMatrix& m);

QuiverRep build_cyclic_module(QuiverKind quiver, NodeType type, char which, int d);
QuiverInvariants invariants_of(const QuiverRep& rep);
std::optional<NodeType> is_cyclic(const QuiverRep& rep, std::uint64_t seed = 1);
CyclicClass classify_cyclic(const QuiverRep& rep, std::uint64_t seed = 1);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// Basis of End(rep), each element block diagonal on V_- ⊕ V_* ⊕ V_+.
std::vector<RMatrix> endomorphisms(const QuiverRep& rep);
// End(rep) = Q·I + N with N a nil ideal, hence no idempotents besides 0 and 1.
bool has_local_endomorphism_ring(const QuiverRep& rep);

// Spaces M_{-l-1}, M_{-l+1}, ..., M_{l+1}. X[i] : M_{p_i} -> M_{p_{i+1}} and
// Y[i] : M_{p_{i+1}} -> M_{p_i}; X[0] = X_-, X[l] = X_+, likewise for Y.
// For l = 0 the fragment is (Z_-, Z_+) = (X[0], Y[0]).
struct HCFragment {
    int l = 0;
    std::vector<int> dims;
    std::vector<RMatrix> X, Y;

    int weight_of(size_t i) const { return -l - 1 + 2 * static_cast<int>(i); }
};

struct IsoWitness {
    RMatrix T, X_star, identity;
};

void validate(const HCFragment& frag);
// Checks XY - YX = H on every interior space.
bool casimir_consistent(const HCFragment& frag);
QuiverRep hc_to_quiver(const HCFragment& frag);
QuiverRep second_description(const HCFragment& frag);
IsoWitness iso_two_descriptions(const HCFragment& frag);
HCFragment random_fragment(int l, int n, std::uint64_t seed);

std::string to_string(NodeType t);
std::optional<NodeType> parse_node_type(const std::string& s);

nlohmann::json rep_to_json(const QuiverRep& rep);
QuiverRep rep_from_json(const nlohmann::json& j);
nlohmann::json fragment_to_json(const HCFragment& frag);
HCFragment fragment_from_json(const nlohmann::json& j);

}  // namespace pm
