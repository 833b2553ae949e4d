#include "eulerlp/character.hpp"

#include <stdexcept>

namespace eulerlp {

namespace {

long reduce(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// Euler's criterion; f is an odd prime.
int legendre_symbol(long a, long f) {
    a = reduce(a, f);
    if (a == 0) return 0;
    long result = 1;
    long base = a;
    for (long e = (f - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % f;
        base = base * base % f;
    }
    return result == 1 ? 1 : -1;
}

}  // namespace

DirichletCharacter::DirichletCharacter(PadicContext ctx, long modulus, long conductor, CharacterKind kind,
                                       std::string label, std::optional<long> exponent,
                                       std::vector<PadicNumber> values)
    : ctx_(std::move(ctx)),
      modulus_(modulus),
      conductor_(conductor),
      kind_(kind),
      label_(std::move(label)),
      exponent_(exponent),
      values_(std::move(values)) {}

DirichletCharacter DirichletCharacter::trivial(const PadicContext& ctx) {
    return {ctx, 1, 1, CharacterKind::trivial, "trivial", 0L, {PadicNumber::one(ctx)}};
}

DirichletCharacter DirichletCharacter::teichmuller_power(long t, const PadicContext& ctx) {
    const long p = static_cast<long>(ctx.prime());
    const long exponent = reduce(t, p - 1);
    if (exponent == 0) return trivial(ctx);
    std::vector<PadicNumber> values;
    values.reserve(static_cast<std::size_t>(p));
    values.push_back(PadicNumber::zero(ctx));
    for (long a = 1; a < p; ++a) values.push_back(unit_pow(teichmuller(a, ctx), exponent));
    return {ctx, p, p, CharacterKind::teichmuller, "w^" + std::to_string(exponent), exponent,
            std::move(values)};
}

DirichletCharacter DirichletCharacter::legendre_like(long f, const PadicContext& ctx) {
    if (f < 3 || !is_prime(static_cast<unsigned long>(f)))
        throw std::invalid_argument("legendre_like: conductor must be an odd prime, got " + std::to_string(f));
    const long p = static_cast<long>(ctx.prime());
    if ((p - 1) % 2 != 0) throw std::invalid_argument("legendre_like: order 2 does not divide p-1");
    std::vector<PadicNumber> values;
    values.reserve(static_cast<std::size_t>(f));
    for (long a = 0; a < f; ++a) values.push_back(PadicNumber::from_integer(legendre_symbol(a, f), ctx));
    // Modulo p itself the quadratic character is w^{(p-1)/2}.
    std::optional<long> exponent;
    if (f == p) exponent = (p - 1) / 2;
    return {ctx, f, f, CharacterKind::legendre_like, "legendre(" + std::to_string(f) + ")", exponent,
            std::move(values)};
}

PadicNumber DirichletCharacter::operator()(long a) const {
    return values_[static_cast<std::size_t>(reduce(a, modulus_))];
}

std::optional<int> DirichletCharacter::sign_value(long a) const {
    const PadicNumber v = (*this)(a);
    if (v.is_zero()) return 0;
    if (v.residue() == 1) return 1;
    if (v.residue() == ctx_.power(v.precision()) - 1) return -1;
    return std::nullopt;
}

nlohmann::ordered_json DirichletCharacter::descriptor() const {
    nlohmann::ordered_json out;
    out["p"] = ctx_.prime();
    switch (kind_) {
        case CharacterKind::trivial:
            out["kind"] = "trivial";
            break;
        case CharacterKind::teichmuller:
            out["kind"] = "teichmuller";
            out["t"] = *exponent_;
            break;
        case CharacterKind::legendre_like:
            out["kind"] = "legendre_like";
            out["f"] = conductor_;
            break;
    }
    return out;
}

PadicNumber char_eval(const DirichletCharacter& chi, long a) { return chi(a); }

DirichletCharacter twist(const DirichletCharacter& chi, long t) {
    const long p = static_cast<long>(chi.context().prime());
    if (chi.modulus() != 1 && chi.modulus() != p)
        throw std::invalid_argument("twist: modulus " + std::to_string(chi.modulus()) + " does not divide p");
    // Every character of modulus 1 or p is a power of w.
    return DirichletCharacter::teichmuller_power(*chi.teichmuller_exponent() + t, chi.context());
}

DirichletCharacter character_from_descriptor(const nlohmann::json& descriptor, const PadicContext& ctx) {
    if (descriptor.contains("p") && descriptor.at("p").get<unsigned long>() != ctx.prime())
        throw std::invalid_argument("character descriptor prime does not match context");
    const auto kind = descriptor.at("kind").get<std::string>();
    if (kind == "trivial") return DirichletCharacter::trivial(ctx);
    if (kind == "teichmuller") return DirichletCharacter::teichmuller_power(descriptor.at("t").get<long>(), ctx);
    if (kind == "legendre_like") return DirichletCharacter::legendre_like(descriptor.at("f").get<long>(), ctx);
    throw std::invalid_argument("unknown character kind '" + kind + "'");
}

}  // namespace eulerlp
