#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fincat/concrete.hpp"
#include "fincat/functor.hpp"
#include "fincat/limits.hpp"

namespace fincat {

struct SubconcretenessWitness; // functor_analysis.hpp

/// An interpretable relation symbol over a concrete category: an arity and
/// one tuple set per object, satisfying the two symbol conditions (images
/// of member tuples are members, and membership is reflected backwards
/// along every morphism).
struct RelationSymbol {
    std::string name;
    int arity = 1;
    std::map<std::string, std::set<std::vector<std::string>>> interp; // object -> tuples
};

struct Signature {
    std::vector<RelationSymbol> symbols;

    const RelationSymbol* find(const std::string& name) const;
};

/// Definitional check of both symbol conditions over k.
Verdict validate_symbol(const ConcreteCategory& k, const RelationSymbol& r);

/// Partition of all arity-n tuples across objects into the components of
/// the reachability closure: two tuples are identified when some chain of
/// morphism images connects them (in either direction). Valid symbols of
/// arity n are exactly the unions of components.
struct TuplePartition {
    int arity = 1;
    std::vector<std::string> objects;                       // object order used below
    std::vector<std::vector<std::vector<std::string>>> tuples; // per object, lexicographic
    std::vector<std::vector<int>> component;                // per object, per tuple index
    int num_components = 0;

    int component_of(const std::string& obj, const std::vector<std::string>& tuple) const;
};

TuplePartition tuple_partition(const ConcreteCategory& k, int arity);

/// Number of valid symbols of arity 1..max_arity (sum of 2^components).
unsigned long long sigma_size(const ConcreteCategory& k, int max_arity);

/// The complete signature of symbols of arity <= max_arity, enumerated in a
/// fixed order with serial names "R<arity>_<index>". Refuses with a budget
/// error when the output would exceed `budget` symbols.
Signature enumerate_sigma(const ConcreteCategory& k, int max_arity,
                          unsigned long long budget = 65536);

/// Tagged union of equal-arity symbols over the components of a product.
RelationSymbol coproduct_symbol(const std::vector<RelationSymbol>& rs, const ProductResult& prod);

/// Symbol r over K pulled back along a carrier-preserving functor p : J -> K
/// (U_J = U_K ∘ p on the nose): interp_J(j) = interp_K(p j).
RelationSymbol pullback_symbol(const RelationSymbol& r, const Functor& p,
                               const ConcreteCategory& j_conc, const ConcreteCategory& k_conc);

/// The binary graph relation over Ins(f,g): at the inserter object (K, s)
/// it relates the wf-embedded image of each a in U2(fK) to the wg-embedded
/// image of (U2 s)(a). Witnesses are validated first; both symbol
/// conditions are re-verified on the result.
RelationSymbol inserter_pairing_symbol(const InserterResult& r, const ConcreteCategory& k1,
                                       const ConcreteCategory& k2, const Functor& f,
                                       const Functor& g, const SubconcretenessWitness& wf,
                                       const SubconcretenessWitness& wg);

/// A sigma-structure: a finite carrier plus one tuple set per symbol name.
struct SigmaStructure {
    std::string name;
    std::vector<std::string> carrier; // sorted
    std::map<std::string, std::set<std::vector<std::string>>> relations;

    bool same_content(const SigmaStructure& other) const {
        return carrier == other.carrier && relations == other.relations;
    }
};

/// Materialized fragment of the category of sigma-structures and
/// embeddings (injections preserving and reflecting every relation).
struct EmbCategory {
    Signature sigma;
    std::vector<SigmaStructure> structures;
};

/// Injective maps X -> Y preserving and reflecting every relation.
std::vector<std::map<std::string, std::string>>
embeddings(const Signature& sigma, const SigmaStructure& x, const SigmaStructure& y);

/// Materializes an EmbCategory as a finite concrete category; embeddings
/// become morphisms named "e<k>|X|Y". Desk-scale sizes only.
ConcreteCategory emb_to_category(const EmbCategory& e);

/// The canonical functor E : K -> Emb(sigma), A |-> (UA, {R_A}).
/// `embeddings_ok` records whether every morphism image is injective (and
/// hence a genuine embedding).
struct CanonicalEmbedding {
    ConcreteCategory k;
    Signature sigma;
    std::map<std::string, SigmaStructure> image; // object -> E(A)
    bool embeddings_ok = true;
};

CanonicalEmbedding canonical_e(const ConcreteCategory& k, const Signature& sigma);

/// Whether a bijection carries E(a) to E(b), preserving and reflecting
/// every symbol of the embedding's signature.
bool is_emb_iso(const CanonicalEmbedding& e, const std::string& a, const std::string& b,
                const std::map<std::string, std::string>& bij);

/// Pass iff every Emb-isomorphism between image structures lifts to an
/// isomorphism of k with the same underlying bijection.
Verdict is_iso_full(const CanonicalEmbedding& e);

/// Pass iff for every object A and every group-respecting bijection f out
/// of UA, some B has E(B) equal (strictly) to the transported structure
/// f·E(A) with A isomorphic to B.
Verdict is_replete_e(const CanonicalEmbedding& e, const Universe& universe);

/// Iso-fullness over the full signature of arity <= max_arity, decided via
/// the tuple partition without materializing the symbol list.
Verdict iso_full_sigma(const ConcreteCategory& k, int max_arity);

/// Repleteness over the full signature, via the tuple partition.
Verdict replete_sigma(const ConcreteCategory& k, int max_arity, const Universe& universe);

/// One rung of the concreteness ladder.
struct LadderReport {
    std::vector<std::pair<std::string, Verdict>> rungs;
    std::string note;

    bool all_pass() const;
    const Verdict* rung(const std::string& name) const;
};

/// Runs the ladder: faithful, coherent, concrete monos, iso-full, replete.
/// Directed-colimit conditions are trivial at finite scale and carried as a
/// note rather than a rung.
LadderReport classify_aec(const ConcreteCategory& k, int max_arity, const Universe& universe);

} // namespace fincat
