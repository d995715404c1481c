#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Set-valued functor data: a finite carrier per object and a total
/// function per morphism.
struct SetFunctor {
    std::map<std::string, std::vector<std::string>> carrier;             // object -> sorted elements
    std::map<std::string, std::map<std::string, std::string>> action;    // morphism -> element map
};

struct ConcreteCategory {
    CatPtr cat;
    SetFunctor u;
};

/// Element pool a transportability/repleteness check quantifies over.
/// Elements are partitioned into groups; the renaming bijections used by
/// those checks map every element within its own group. A plain pool is a
/// single group; tagged pools of constructed categories keep one group per
/// component so renamings respect the tag discipline.
struct Universe {
    std::vector<std::vector<std::string>> groups;

    bool contains(const std::string& e) const;
    int group_of(const std::string& e) const;  // -1 if absent
    std::vector<std::string> all() const;
};

/// Carrier elements of k plus `fresh` new elements, as a single group.
Universe default_universe(const ConcreteCategory& k, int fresh = 2);

/// Functoriality of u over k: total carriers/actions, identities to
/// identity maps, composites to composed maps.
Verdict validate_concrete(const ConcreteCategory& k);

/// True iff distinct parallel morphisms have distinct underlying functions.
bool is_faithful_u(const ConcreteCategory& k);

/// True iff every morphism is mono and its underlying function injective.
bool has_concrete_monos(const ConcreteCategory& k);

/// For every h : A -> C, g : B -> C and every function f : UA -> UB with
/// U(g)∘f = U(h), some morphism A -> B must have underlying function f.
/// Triangles with A = B = C are included. Failure carries (h, g, f).
Verdict is_coherent(const ConcreteCategory& k);

/// Every group-respecting bijection out of an object's carrier must lift
/// to exactly one isomorphism of k. Failure carries (A, f).
Verdict is_transportable(const ConcreteCategory& k, const Universe& universe);

/// Closure of k under renaming objects along group-respecting bijections
/// into the universe, with morphisms transported by conjugation. One object
/// is kept per orbit of bijections under the automorphism action, so the
/// result passes is_transportable over the same universe.
ConcreteCategory make_transportable(const ConcreteCategory& k, const Universe& universe);

/// All group-respecting bijections from `carrier` into the universe,
/// enumerated in a canonical order.
std::vector<std::map<std::string, std::string>>
universe_bijections(const std::vector<std::string>& carrier, const Universe& universe);

/// Restriction of a concrete structure to a full subcategory.
SetFunctor restrict_u(const SetFunctor& u, const FinCategory& sub);

/// Builds a concrete category as a subcategory of finite sets: identities
/// are added automatically, generators are closed under composition, and a
/// composite that equals an existing function between the same objects is
/// identified with it. Associativity and faithfulness hold by construction.
class ConcreteBuilder {
public:
    explicit ConcreteBuilder(std::string name) : name_(std::move(name)) {}

    void add_object(const std::string& obj, std::vector<std::string> carrier);
    /// Adds a generator morphism; returns false when an equal function
    /// between the same objects is already present.
    bool add_morphism(const std::string& id, const std::string& dom, const std::string& cod,
                      std::map<std::string, std::string> action);

    /// Closure under composition. Returns false when the morphism count
    /// would exceed `max_morphisms`; the builder is then left unusable.
    bool close(std::size_t max_morphisms = 512);

    ConcreteCategory result() const;
    std::size_t morphism_count() const { return mors_.size(); }

private:
    struct Mor {
        std::string id, dom, cod;
        std::map<std::string, std::string> action;
    };
    std::string name_;
    std::vector<std::string> objects_;
    std::map<std::string, std::vector<std::string>> carriers_;
    std::vector<Mor> mors_;
    std::map<std::string, std::string> identity_;
    std::map<std::pair<std::string, std::string>, std::string> compose_;
    int serial_ = 0;

    int find_same(const std::string& dom, const std::string& cod,
                  const std::map<std::string, std::string>& action) const;
};

} // namespace fincat
