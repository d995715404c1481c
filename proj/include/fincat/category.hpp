#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/common.hpp"

namespace fincat {

struct Morphism {
    std::string id;
    std::string dom;
    std::string cod;

    bool operator==(const Morphism&) const = default;
};

/// A finite category given by explicit tables. Object and morphism
/// identifiers are opaque strings; equality is identifier equality.
/// `compose[(g,f)] = g∘f`, defined exactly when cod(f) = dom(g).
struct FinCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::map<std::string, std::string> identity;                          // object -> morphism id
    std::map<std::pair<std::string, std::string>, std::string> compose;   // (g, f) -> g∘f

    const Morphism* find(const std::string& mor_id) const;
    bool has_object(const std::string& obj) const;
    /// Composite g∘f, or nullopt when the pair is not in the table.
    std::optional<std::string> composite(const std::string& g, const std::string& f) const;
    bool is_identity(const std::string& mor_id) const;
    /// Morphism ids with the given dom and cod, in declaration order.
    std::vector<std::string> hom(const std::string& dom, const std::string& cod) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Indexed view for the hot enumeration loops. Built once per heavy check.
struct CatView {
    const FinCategory& cat;
    std::map<std::string, int> obj_idx;
    std::map<std::string, int> mor_idx;
    std::vector<int> dom_of, cod_of;                 // by morphism index
    std::vector<std::vector<std::vector<int>>> hom;  // hom[dom][cod] -> morphism indices
    std::vector<int> comp;                           // comp[g * n + f] -> index or -1

    explicit CatView(const FinCategory& c);
    int n_mor() const { return static_cast<int>(cat.morphisms.size()); }
    int n_obj() const { return static_cast<int>(cat.objects.size()); }
    /// g∘f by index; -1 when not composable or missing from the table.
    int composite(int g, int f) const { return comp[static_cast<std::size_t>(g) * n_mor() + f]; }
};

/// Checks structural well-formedness first (dangling ids are reported as
/// law "structure"), then totality, closure, identity laws and
/// associativity, naming the first violated law with its witnesses.
Verdict validate_category(const FinCategory& c);

/// f is mono iff f∘u = f∘v implies u = v; decided by exhaustive search.
bool is_mono(const FinCategory& c, const std::string& mor_id);
bool is_mono_idx(const CatView& v, int f);

/// Two-sided inverse of f if one exists.
std::optional<std::string> is_isomorphism(const FinCategory& c, const std::string& mor_id);
int inverse_idx(const CatView& v, int f);

bool iso_exists(const FinCategory& c, const std::string& a, const std::string& b);

CatPtr terminal_category(const std::string& name = "1");

} // namespace fincat
