#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fincat {

/// Outcome of a single predicate or law check. `law` names the first
/// violated law when `pass` is false; `witness` renders the offending data.
struct Verdict {
    bool pass = true;
    std::string law;
    std::string witness;

    static Verdict ok() { return Verdict{}; }
    static Verdict fail(std::string law, std::string witness) {
        return Verdict{false, std::move(law), std::move(witness)};
    }
    explicit operator bool() const { return pass; }
};

struct Error : std::runtime_error {
    enum class Kind { precondition, budget, structure };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_precondition(const std::string& msg) {
    throw Error(Error::Kind::precondition, msg);
}
[[noreturn]] inline void fail_budget(const std::string& msg) {
    throw Error(Error::Kind::budget, msg);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

/// Renders a tuple of element names as "(a,b)".
inline std::string show_tuple(const std::vector<std::string>& t) {
    return "(" + join(t, ",") + ")";
}

/// Renders a finite map as "a->b, c->d" following key order.
inline std::string show_map(const std::map<std::string, std::string>& m) {
    std::vector<std::string> parts;
    parts.reserve(m.size());
    for (const auto& [k, v] : m) parts.push_back(k + "->" + v);
    return join(parts, ", ");
}

} // namespace fincat
