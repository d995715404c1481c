#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A functor between finite categories, as explicit object/morphism maps.
struct Functor {
    CatPtr source;
    CatPtr target;
    std::map<std::string, std::string> obj_map;
    std::map<std::string, std::string> mor_map;

    const std::string& on_obj(const std::string& o) const { return obj_map.at(o); }
    const std::string& on_mor(const std::string& m) const { return mor_map.at(m); }
};

/// A natural transformation between parallel functors; `at` assigns each
/// source object a target morphism F(K) -> G(K).
struct NatTrans {
    Functor f;
    Functor g;
    std::map<std::string, std::string> at;
};

Verdict validate_functor(const Functor& f);
Verdict validate_nat(const NatTrans& t);

Functor identity_functor(const CatPtr& c);

/// Pointwise composition g∘f; requires target(f) = source(g).
Functor compose_functors(const Functor& f, const Functor& g);

bool functors_equal(const Functor& a, const Functor& b);
bool nats_equal(const NatTrans& a, const NatTrans& b);

/// Whiskering (phi ∘ H): component at X is phi at H(X).
NatTrans whisker(const NatTrans& phi, const Functor& h);

NatTrans identity_nat(const Functor& f);

bool is_full(const Functor& f);
bool is_faithful(const Functor& f);
bool is_essentially_surjective(const Functor& f);
bool is_equivalence(const Functor& f);

/// All functors source -> target, enumerated by backtracking in a canonical
/// order, up to `cap` results. Exhaustive when the result size is < cap.
std::vector<Functor> enumerate_functors(const CatPtr& source, const CatPtr& target,
                                        std::size_t cap = 100000);

/// All natural transformations f => g for parallel f, g, up to `cap`.
std::vector<NatTrans> enumerate_nats(const Functor& f, const Functor& g,
                                     std::size_t cap = 100000);

} // namespace fincat
