#ifndef AMAP_INSTANCE_HPP
#define AMAP_INSTANCE_HPP

// A parsed (domain, a, n) triple with type-erased dispatch to the dynamics
// operations.  Input is JSON:
//   {"domain": {"kind": "Z"} | {"kind": "poly", "p": 3, "k": 1, "modulus": [..]}
//            | {"kind": "quad", "d": -5},
//    "a": 2 | [c0, c1, ...] | [x, y],
//    "n": 24 | [c0, c1, ...] | {"gens": [[x, y], ...]}}

#include "amap/dynamics.hpp"
#include "amap/integers.hpp"
#include "amap/poly.hpp"
#include "amap/quadorder.hpp"

#include <string>
#include <variant>

namespace amap {

template <Domain D>
struct TypedInstance
{
    D dom;
    element_t<D> a;
    ideal_t<D> n;
};

class Instance
{
  public:
    using Variant = std::variant<TypedInstance<IntegerDomain>, TypedInstance<PolyDomain>,
                                 TypedInstance<QuadraticOrder>>;

    /// Throws ParseError on malformed input, InvalidArgument on invalid values.
    static Instance from_json(nlohmann::json const & j);

    /// Command-line forms: domain "Z" | "poly:p[:k]" | "quad:d"; elements as
    /// comma-separated integers; quadratic ideals as "x,y;x,y;...".
    static Instance from_strings(std::string const & domain, std::string const & a,
                                 std::string const & n, std::string const & n_gens);

    Variant const & get() const { return v_; }

    nlohmann::json header() const;
    std::uint64_t norm() const;
    nlohmann::json predict() const;
    nlohmann::json brute(std::uint64_t max_nodes) const;
    Report verify(VerifyOptions const & opt) const;
    std::string predicted_dot(std::uint64_t max_nodes) const;
    std::string brute_dot(std::uint64_t max_nodes) const;

  private:
    explicit Instance(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Parses a comma-separated integer list such as "1,0,1".
std::vector<std::int64_t> parse_int_list(std::string const & s);

} // namespace amap

#endif
