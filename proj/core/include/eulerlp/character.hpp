#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulerlp/padic.hpp"

namespace eulerlp {

enum class CharacterKind { trivial, teichmuller, legendre_like };

/// A Dirichlet character whose values lie in Z_p: the trivial character,
/// powers of the Teichmuller character w modulo p, and quadratic characters
/// of small odd prime conductor.
class DirichletCharacter {
public:
    static DirichletCharacter trivial(const PadicContext& ctx);
    /// w^t, with t reduced mod p-1. Collapses to the trivial character
    /// (modulus 1) when t = 0 mod p-1.
    static DirichletCharacter teichmuller_power(long t, const PadicContext& ctx);
    /// Quadratic character (a/f) for an odd prime f. Requires its order, 2,
    /// to divide p-1.
    static DirichletCharacter legendre_like(long f, const PadicContext& ctx);

    [[nodiscard]] const PadicContext& context() const { return ctx_; }
    [[nodiscard]] long modulus() const { return modulus_; }
    [[nodiscard]] long conductor() const { return conductor_; }
    [[nodiscard]] CharacterKind kind() const { return kind_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    /// Exponent t in [0, p-1) when the character is a power of w.
    [[nodiscard]] std::optional<long> teichmuller_exponent() const { return exponent_; }

    /// chi(a mod F); zero off the units of the modulus.
    [[nodiscard]] PadicNumber operator()(long a) const;

    /// chi(a) as an integer when it is 0 or +-1, else nullopt.
    [[nodiscard]] std::optional<int> sign_value(long a) const;

    [[nodiscard]] nlohmann::ordered_json descriptor() const;

private:
    DirichletCharacter(PadicContext ctx, long modulus, long conductor, CharacterKind kind,
                       std::string label, std::optional<long> exponent,
                       std::vector<PadicNumber> values);

    PadicContext ctx_;
    long modulus_;
    long conductor_;
    CharacterKind kind_;
    std::string label_;
    std::optional<long> exponent_;
    std::vector<PadicNumber> values_;
};

PadicNumber char_eval(const DirichletCharacter& chi, long a);

/// a -> chi(a) w(a)^t. chi must have modulus 1 or p.
DirichletCharacter twist(const DirichletCharacter& chi, long t);

/// Builds a character from {"p", "kind", "t" | "f"}; precision comes from ctx.
DirichletCharacter character_from_descriptor(const nlohmann::json& descriptor, const PadicContext& ctx);

}  // namespace eulerlp
