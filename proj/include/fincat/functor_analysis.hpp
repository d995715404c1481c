#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/concrete.hpp"
#include "fincat/functor.hpp"
#include "fincat/signature.hpp"

namespace fincat {

/// Witness that a functor h : K1 -> K2 is subconcrete: an injective natural
/// family alpha_A : U2(hA) -> U1(A) whose images are reflected by the
/// morphisms of K1 (preimages of image elements are image elements).
struct SubconcretenessWitness {
    std::map<std::string, std::map<std::string, std::string>> alpha; // K1 object -> component
};

/// Injectivity, naturality and image reflection, checked definitionally.
Verdict validate_witness(const Functor& h, const ConcreteCategory& k1,
                         const ConcreteCategory& k2, const SubconcretenessWitness& w);

/// U2 ∘ h = U1 strictly, on objects and morphisms.
bool is_concrete(const Functor& h, const ConcreteCategory& k1, const ConcreteCategory& k2);

/// Identity components; a witness for any concrete functor.
SubconcretenessWitness concrete_witness(const Functor& h, const ConcreteCategory& k2);

/// Witness for h2∘h1 composed from witnesses of the factors.
SubconcretenessWitness compose_witnesses(const Functor& h1, const SubconcretenessWitness& w1,
                                         const Functor& h2, const SubconcretenessWitness& w2,
                                         const ConcreteCategory& k3);

/// Coproduct-injection witness for a product projection.
SubconcretenessWitness projection_witness(const ProductResult& prod, std::size_t index);

enum class SearchStatus { found, none, unknown };

struct WitnessSearch {
    SearchStatus status = SearchStatus::none;
    SubconcretenessWitness witness; // meaningful when status == found
    unsigned long long nodes = 0;
};

/// Backtracking search over injective component families, pruned by
/// naturality and reflection as soon as both endpoints of a morphism are
/// assigned. The first witness in canonical order wins. "unknown" (budget
/// exhausted) is distinct from "none".
WitnessSearch find_subconcrete_witness(const Functor& h, const ConcreteCategory& k1,
                                       const ConcreteCategory& k2,
                                       unsigned long long budget = 500000);

/// Arity-preserving map from one enumerated signature into another, with
/// the designated carrier symbol (the image of the full unary symbol).
struct SignatureMorphism {
    Signature source; // signature over K2
    Signature target; // signature over K1
    std::map<std::string, std::string> symbol_map;
    std::string carrier_symbol;
    std::vector<std::string> anomalies; // image symbols that failed validation
};

/// Sends each symbol R over K2 to the symbol with interpretation
/// alpha^n(R at hA); every image is located inside the enumerated
/// signature over K1. Invalid images are flagged, never dropped.
SignatureMorphism induced_signature_morphism(const Functor& h, const ConcreteCategory& k1,
                                             const ConcreteCategory& k2,
                                             const SubconcretenessWitness& w, int max_arity,
                                             unsigned long long budget = 65536);

/// Reduct of a single structure: carrier is the interpretation of the
/// designated carrier symbol, relations are pulled along the morphism and
/// restricted to the new carrier.
SigmaStructure reduct_structure(const SignatureMorphism& sm, const SigmaStructure& m);

/// Materialized reduct functor between embedding categories.
struct ReductResult {
    EmbCategory source_emb;
    EmbCategory target_emb;
    ConcreteCategory source_cat;
    ConcreteCategory target_cat;
    Functor functor;
    SubconcretenessWitness carrier_inclusion;
};
ReductResult reduct_functor(const SignatureMorphism& sm, const EmbCategory& source);

/// Coherence of the concrete structure U2∘h on K1: every commuting
/// triangle of carrier functions over a pair of K1-morphisms must lift.
Verdict is_coherent_functor(const Functor& h, const ConcreteCategory& k1,
                            const ConcreteCategory& k2, const SubconcretenessWitness& w);

/// Every isomorphism hA -> B in K2 must be the h-image of an isomorphism
/// out of A in K1. Quantification ranges over the isomorphisms present in
/// the finite target.
Verdict is_transportable_functor(const Functor& h, const ConcreteCategory& k1,
                                 const ConcreteCategory& k2);

} // namespace fincat
