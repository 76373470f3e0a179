#include <stdexcept>

#include "skewgenus/bounds.hpp"
#include "skewgenus/certificates.hpp"

namespace skewgenus {

namespace {

BoundCertificate chain_piece(LinkChain chain) {
    BoundCertificate piece;
    SkewShape shape = chain_shape(chain);
    piece.upper = static_cast<long long>(chain.link_count());
    piece.lower = shape.size() > 0 ? 1 : 0;
    piece.target = std::move(shape);
    piece.node = BoundCertificate::ChainNode{std::move(chain)};
    return piece;
}

BoundCertificate komeda_piece(const KomedaCertificate& kc, SkewShape piece_shape,
                              bool reflected) {
    BoundCertificate piece;
    piece.upper = kc.tg_value;
    piece.lower = piece_shape.size() > 0 ? 1 : 0;
    piece.target = std::move(piece_shape);
    piece.node = BoundCertificate::KomedaNode{kc.semigroup, kc.rank, kc.tg_value, reflected};
    return piece;
}

LinkChain reflect_chain(const LinkChain& chain, int n) {
    LinkChain out;
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it)
        out.steps.push_back(it->reflected(n));
    return out;
}

}  // namespace

BoundCertificate main2_decomposition(long long a, long long b, long long ell,
                                     std::size_t state_budget) {
    if (a < 4 || b < 4)
        throw std::invalid_argument("main2_decomposition requires a, b >= 4");
    if (ell < 1 || ell > b - 3)
        throw std::invalid_argument("main2_decomposition requires 1 <= ell <= b-3");

    const int ai = static_cast<int>(a);
    const int bi = static_cast<int>(b);
    const int k = (ai - 1) / 2;

    const KomedaCertificate axiom = komeda_tg(stage_one_semigroup(k), ai - 1);
    const RamSeq seed = tau(ai, 2 * k + 1, k, k);
    if (axiom.shape.upper != seed)
        throw std::logic_error("stage-one semigroup shape does not match its tau form");

    LinkChain up = ladder_chain(ai, static_cast<int>(ell), state_budget);
    LinkChain down = reflect_chain(
        ladder_chain(ai, static_cast<int>(b - ell - 2), state_budget), bi);

    BoundCertificate cert;
    cert.target = BoundCertificate::RectTarget{a, b};
    cert.lower = tg_lower(a, b);

    BoundCertificate::SplitNode split;
    split.rule = "skew";
    split.children.push_back(komeda_piece(axiom, axiom.shape, false));
    split.children.push_back(chain_piece(std::move(up)));
    split.children.push_back(chain_piece(std::move(down)));
    split.children.push_back(
        komeda_piece(axiom,
                     SkewShape::make(seed.reflected(bi), RamSeq::constant(bi, ai)), true));

    long long total = 0;
    for (const auto& piece : split.children) total += piece.upper;
    cert.upper = total;
    cert.node = std::move(split);

    if (cert.upper > (a * b + 4) / 2)
        throw std::logic_error("four-stage certificate exceeded floor(ab/2 + 2)");
    replay_certificate(cert);
    return cert;
}

}  // namespace skewgenus
