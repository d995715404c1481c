#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/concrete.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// Componentwise product with the tagged-disjoint-union underlying functor.
/// Elements of U(A_1,...,A_n) are "<i>@<e>" pairs; tags are part of equality.
struct ProductResult {
    ConcreteCategory concrete;
    std::vector<Functor> projections;
};
ProductResult product(const std::vector<ConcreteCategory>& ks);

/// Tagged union of the component universes, one group per component group,
/// matching the product's element naming.
Universe tagged_universe(const std::vector<Universe>& components);

/// Comma category f ↓ g for functors with a common target; objects are
/// triples (K, K', h : fK -> gK'), morphisms are commuting pairs.
struct CommaResult {
    CatPtr comma;
    Functor proj_src;
    Functor proj_dst;
};
CommaResult comma(const Functor& f, const Functor& g);

/// Inserter of a parallel pair: objects are morphisms s : fK -> gK, named
/// by the (source object, target morphism) pair; morphisms are source
/// morphisms making the defining square commute.
struct InserterResult {
    CatPtr ins;
    Functor projection;     // ins -> source of f
    NatTrans phi;           // f∘P => g∘P, component at (K, s) is s
};
InserterResult inserter(const Functor& f, const Functor& g);

/// Concrete structure U∘P on the inserter, for concrete sources.
ConcreteCategory inserter_concrete(const InserterResult& r, const ConcreteCategory& source);

/// Full subcategory on the objects where the two transformations agree.
struct EquifierResult {
    CatPtr eq;
    Functor inclusion;
};
EquifierResult equifier(const NatTrans& phi, const NatTrans& psi);

ConcreteCategory equifier_concrete(const EquifierResult& r, const ConcreteCategory& source);

/// The unique functor H̄ with P∘H̄ = h and phi∘H̄ = psi.
Functor inserter_factorize(const InserterResult& r, const Functor& f, const Functor& g,
                           const Functor& h, const NatTrans& psi);

/// Corestriction of h to the equifier; throws a precondition error naming
/// the first object where the two transformations disagree along h.
Functor equifier_factorize(const EquifierResult& r, const NatTrans& phi, const NatTrans& psi,
                           const Functor& h);

/// Strict pullback of the underlying-set functors: objects are pairs with
/// equal carriers, morphisms pairs with equal actions.
struct PullbackResult {
    ConcreteCategory pb;
    Functor p1, p2;
};
PullbackResult pullback(const ConcreteCategory& k1, const ConcreteCategory& k2);

/// Pseudopullback: objects carry an explicit bijection between the two
/// carriers; morphisms are pairs compatible with the bijections.
struct PseudopullbackResult {
    ConcreteCategory psb;
    Functor p1, p2;
    std::map<std::string, std::map<std::string, std::string>> bijection_of; // object -> U1A1 -> U2A2
};
PseudopullbackResult pseudopullback(const ConcreteCategory& k1, const ConcreteCategory& k2);

/// Canonical comparison functor pullback -> pseudopullback plus the verdict
/// of the is_equivalence check on it.
struct CompareResult {
    PullbackResult pb;
    PseudopullbackResult psb;
    Functor comparison;
    Verdict verdict;
};
CompareResult compare_pb_psb(const ConcreteCategory& k1, const ConcreteCategory& k2);

/// All bijections between two finite sets, in a canonical order.
std::vector<std::map<std::string, std::string>>
all_bijections(const std::vector<std::string>& from, const std::vector<std::string>& to);

/// Tag applied to component elements inside a product carrier.
std::string product_tag(std::size_t component, const std::string& element);

} // namespace fincat
