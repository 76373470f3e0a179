#include "skewgenus/certificates.hpp"

#include <stdexcept>

#include "skewgenus/bounds.hpp"

namespace skewgenus {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

json target_to_json(const BoundCertificate& cert) {
    if (const auto* rect = std::get_if<BoundCertificate::RectTarget>(&cert.target))
        return json{{"a", rect->a}, {"b", rect->b}};
    return json{{"shape", to_string(std::get<SkewShape>(cert.target))}};
}

json node_to_json(const BoundCertificate& cert) {
    return std::visit(
        [](const auto& node) -> json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, BoundCertificate::BaseNode>) {
                json j{{"type", "base"}, {"id", node.id}};
                if (node.exact) j["exact"] = true;
                return j;
            } else if constexpr (std::is_same_v<T, BoundCertificate::FormulaNode>) {
                return json{{"type", "formula"}, {"id", node.id}};
            } else if constexpr (std::is_same_v<T, BoundCertificate::ChainNode>) {
                json steps = json::array();
                for (const auto& seq : node.chain.steps) steps.push_back(to_string(seq));
                return json{{"type", "chain"}, {"steps", std::move(steps)}};
            } else if constexpr (std::is_same_v<T, BoundCertificate::KomedaNode>) {
                return json{{"type", "komeda"},
                            {"provenance", "geometric-axiom"},
                            {"semigroup", json{{"gaps", node.semigroup.gaps()}}},
                            {"rank", node.rank},
                            {"genus", node.genus},
                            {"orientation", node.reflected ? "reflected" : "direct"}};
            } else {
                json children = json::array();
                for (const auto& child : node.children)
                    children.push_back(certificate_to_json(child));
                return json{{"type", "split"}, {"rule", node.rule},
                            {"children", std::move(children)}};
            }
        },
        cert.node);
}

}  // namespace

json certificate_to_json(const BoundCertificate& cert) {
    return json{{"target", target_to_json(cert)},
                {"upper", cert.upper},
                {"lower", cert.lower},
                {"node", node_to_json(cert)}};
}

std::string certificate_to_canonical_json(const BoundCertificate& cert) {
    // nlohmann objects iterate in key order, so a plain dump is canonical.
    return certificate_to_json(cert).dump();
}

BoundCertificate certificate_from_json(const json& j) {
    BoundCertificate cert;
    const json& target = j.at("target");
    if (target.contains("shape"))
        cert.target = parse_shape(target.at("shape").get<std::string>());
    else
        cert.target = BoundCertificate::RectTarget{target.at("a").get<long long>(),
                                                   target.at("b").get<long long>()};
    cert.upper = j.at("upper").get<long long>();
    cert.lower = j.at("lower").get<long long>();

    const json& node = j.at("node");
    const auto type = node.at("type").get<std::string>();
    if (type == "base") {
        BoundCertificate::BaseNode n{node.at("id").get<std::string>(),
                                     node.value("exact", false)};
        cert.node = std::move(n);
    } else if (type == "formula") {
        cert.node = BoundCertificate::FormulaNode{node.at("id").get<std::string>()};
    } else if (type == "chain") {
        BoundCertificate::ChainNode n;
        for (const auto& step : node.at("steps"))
            n.chain.steps.push_back(parse_ram_seq(step.get<std::string>()));
        cert.node = std::move(n);
    } else if (type == "komeda") {
        BoundCertificate::KomedaNode n{
            NumericalSemigroup::from_gaps(node.at("semigroup").at("gaps").get<std::vector<int>>()),
            node.at("rank").get<int>(), node.at("genus").get<long long>(),
            node.at("orientation").get<std::string>() == "reflected"};
        cert.node = std::move(n);
    } else if (type == "split") {
        BoundCertificate::SplitNode n;
        n.rule = node.at("rule").get<std::string>();
        for (const auto& child : node.at("children"))
            n.children.push_back(certificate_from_json(child));
        cert.node = std::move(n);
    } else {
        fail("unknown certificate node type '" + type + "'");
    }
    return cert;
}

namespace {

SkewShape target_shape(const BoundCertificate& cert) {
    if (const auto* rect = std::get_if<BoundCertificate::RectTarget>(&cert.target)) {
        if (rect->a < 1 || rect->b < 1) fail("rectangle target needs a, b >= 1");
        return SkewShape::make(RamSeq::constant(0, static_cast<int>(rect->a)),
                               RamSeq::constant(static_cast<int>(rect->b),
                                                static_cast<int>(rect->a)));
    }
    return std::get<SkewShape>(cert.target);
}

void replay_base(const BoundCertificate& cert, const BoundCertificate::BaseNode& node) {
    const auto* rect = std::get_if<BoundCertificate::RectTarget>(&cert.target);
    if (!rect) fail("base node requires a rectangle target");
    const long long mn = std::min(rect->a, rect->b);
    const long long mx = std::max(rect->a, rect->b);
    long long expect = -1;
    if (node.id == "a1" && mn == 1) expect = mx;
    else if (node.id == "a2" && mn == 2) expect = mx + 1;
    else if (node.id == "a3" && mn == 3 && mx >= 3) expect = mx + sqrt_ceil_term(mx);
    else if (node.id == "tg4b" && mn == 4) expect = mx - 3 + pareschi_threshold(mx);
    else fail("base node '" + node.id + "' does not apply to this rectangle");
    if (node.exact && node.id != "a1" && node.id != "a2")
        fail("only the a1/a2 base cases are exact");
    if (expect != cert.upper)
        fail("base node value mismatch: recomputed " + std::to_string(expect) +
             ", certificate says " + std::to_string(cert.upper));
}

void replay_formula(const BoundCertificate& cert, const BoundCertificate::FormulaNode& node) {
    const auto* rect = std::get_if<BoundCertificate::RectTarget>(&cert.target);
    if (!rect) fail("formula node requires a rectangle target");
    long long expect = -1;
    if (node.id == "asy")
        expect = std::min(asy_upper(rect->a, rect->b), asy_upper(rect->b, rect->a));
    else if (node.id == "bn-trivial")
        expect = rect->a * rect->b;
    else
        fail("unknown formula id '" + node.id + "'");
    if (expect != cert.upper)
        fail("formula node value mismatch: recomputed " + std::to_string(expect) +
             ", certificate says " + std::to_string(cert.upper));
}

void replay_chain_node(const BoundCertificate& cert, const BoundCertificate::ChainNode& node) {
    const SkewShape shape = target_shape(cert);
    if (node.chain.steps.empty() || node.chain.steps.front() != shape.lower ||
        node.chain.steps.back() != shape.upper)
        fail("chain endpoints do not match the certificate target");
    replay_chain(node.chain);  // throws on any non-link step
    if (static_cast<long long>(node.chain.link_count()) != cert.upper)
        fail("chain length does not match the certified bound");
}

void replay_komeda(const BoundCertificate& cert, const BoundCertificate::KomedaNode& node) {
    if (!node.semigroup.is_primitive()) fail("komeda node: semigroup is not primitive");
    if (node.semigroup.genus() > 0 && node.semigroup.weight() > node.semigroup.genus() - 1)
        fail("komeda node: weight exceeds genus - 1");
    if (node.genus != node.semigroup.genus()) fail("komeda node: genus mismatch");
    if (cert.upper != node.genus) fail("komeda node: bound must equal the genus");

    const SkewShape expected = komeda_shape(node.semigroup, node.rank);
    SkewShape shape = target_shape(cert);
    if (node.reflected) {
        const int n = shape.upper[0];
        for (std::size_t i = 0; i < shape.upper.size(); ++i)
            if (shape.upper[i] != n) fail("komeda node: reflected target must have a flat top");
        shape = reflected(shape, n);
    }
    if (shape != expected)
        fail("komeda node: target shape does not match the axiom shape " + to_string(expected));
}

void replay_split(const BoundCertificate& cert, const BoundCertificate::SplitNode& node) {
    if (node.children.empty()) fail("split node requires children");
    long long total = 0;
    for (const auto& child : node.children) {
        replay_certificate(child);
        total += child.upper;
    }
    if (total != cert.upper)
        fail("split children sum to " + std::to_string(total) + ", certificate says " +
             std::to_string(cert.upper));

    if (node.rule == "skew") {
        const SkewShape whole = target_shape(cert);
        const SkewShape first = target_shape(node.children.front());
        const SkewShape last = target_shape(node.children.back());
        if (first.lower != whole.lower || last.upper != whole.upper)
            fail("skew split does not span its target");
        for (std::size_t i = 0; i + 1 < node.children.size(); ++i)
            if (target_shape(node.children[i]).upper !=
                target_shape(node.children[i + 1]).lower)
                fail("skew split pieces do not telescope at piece " + std::to_string(i));
        return;
    }

    const auto* rect = std::get_if<BoundCertificate::RectTarget>(&cert.target);
    if (!rect) fail("row/column split requires a rectangle target");
    long long sum = 0;
    for (const auto& child : node.children) {
        const auto* part = std::get_if<BoundCertificate::RectTarget>(&child.target);
        if (!part) fail("row/column split children must be rectangles");
        if (node.rule == "row") {
            if (part->b != rect->b) fail("row split children must keep b fixed");
            sum += part->a;
        } else if (node.rule == "column") {
            if (part->a != rect->a) fail("column split children must keep a fixed");
            sum += part->b;
        } else {
            fail("unknown split rule '" + node.rule + "'");
        }
    }
    if (sum != (node.rule == "row" ? rect->a : rect->b))
        fail("split children do not partition the target rectangle");
}

}  // namespace

void replay_certificate(const BoundCertificate& cert) {
    if (cert.lower > cert.upper) fail("certificate has lower > upper");
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, BoundCertificate::BaseNode>)
                replay_base(cert, node);
            else if constexpr (std::is_same_v<T, BoundCertificate::FormulaNode>)
                replay_formula(cert, node);
            else if constexpr (std::is_same_v<T, BoundCertificate::ChainNode>)
                replay_chain_node(cert, node);
            else if constexpr (std::is_same_v<T, BoundCertificate::KomedaNode>)
                replay_komeda(cert, node);
            else
                replay_split(cert, node);
        },
        cert.node);
}

}  // namespace skewgenus
