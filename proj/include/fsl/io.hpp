#ifndef FSL_IO_HPP
#define FSL_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace fsl
{
using Json = nlohmann::json;

/// A lattice-point set together with everything needed to interpret its coordinates.
struct PolytopeDocument
{
    LieType                    type;
    DominantWeight             weight;
    std::string                kind; // "fflv" or "string"
    std::vector< RootLabel >   labels;
    LatticePointSet            points{0};
    std::optional< ReducedWord > word; // string documents only

    friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

inline PolytopeDocument make_fflv_document(const LieType& type, const DominantWeight& lambda)
{
    return {type, lambda, "fflv", build_labels(type), points(type, lambda), std::nullopt};
}

inline PolytopeDocument make_string_document(const LieType& type, const DominantWeight& lambda,
                                             const CrystalConventions& conv = calibrated_conventions())
{
    return {type, lambda, "string", build_labels(type), string_points(type, lambda, conv), reduced_word(type)};
}

inline Json to_json(const RootLabel& l) { return Json{{"row", l.row}, {"col", l.col}, {"barred", l.barred}}; }

inline Json to_json(const PolytopeDocument& doc)
{
    Json labels = Json::array();
    for (const auto& l : doc.labels)
        labels.push_back(to_json(l));
    Json pts = Json::array();
    for (const auto& p : doc.points)
        pts.push_back(p);
    Json j{{"type", std::string(1, family_char(doc.type.family))},
           {"rank", doc.type.rank},
           {"weight", doc.weight.coeffs()},
           {"kind", doc.kind},
           {"labels", std::move(labels)},
           {"points", std::move(pts)}};
    if (doc.word)
        j["word"] = *doc.word;
    return j;
}

inline Family parse_family(const std::string& s)
{
    if (s == "A")
        return Family::A;
    if (s == "C")
        return Family::C;
    throw std::invalid_argument("unknown type '" + s + "' (expected A or C)");
}

/// Parses and validates a document: labels must be the canonical sequence for the
/// type and every point must have one coordinate per label.
inline PolytopeDocument document_from_json(const Json& j)
{
    const LieType  type(parse_family(j.at("type").get< std::string >()), j.at("rank").get< int >());
    DominantWeight weight(j.at("weight").get< IntVector >());
    check_weight_rank(type, weight);
    const auto kind = j.at("kind").get< std::string >();
    if (kind != "fflv" && kind != "string")
        throw std::invalid_argument("unknown document kind '" + kind + "'");

    std::vector< RootLabel > labels;
    for (const auto& l : j.at("labels"))
        labels.push_back({l.at("row").get< int >(), l.at("col").get< int >(), l.at("barred").get< bool >()});
    if (labels != build_labels(type))
        throw std::invalid_argument("labels do not match the canonical order for " + type.name());

    std::vector< ExponentVector > pts;
    for (const auto& p : j.at("points"))
    {
        auto v = p.get< ExponentVector >();
        if (v.size() != labels.size())
            throw std::invalid_argument("point of length " + std::to_string(v.size()) + ", expected " +
                                        std::to_string(labels.size()));
        pts.push_back(std::move(v));
    }
    std::optional< ReducedWord > word;
    if (j.contains("word"))
        word = j.at("word").get< ReducedWord >();
    LatticePointSet set(labels.size(), std::move(pts));
    return {type, std::move(weight), kind, std::move(labels), std::move(set), std::move(word)};
}

inline Json to_json(const WitnessList& w) { return Json{{"points", w.points}, {"total", w.total}}; }

inline Json rational_to_json(const Rational& r)
{
    if (denominator(r) == 1)
        return Json(numerator(r).str());
    return Json(numerator(r).str() + "/" + denominator(r).str());
}

inline Json to_json(const WeightTwist& t)
{
    Json linear = Json::array();
    for (const auto& row : t.linear)
    {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(rational_to_json(v));
        linear.push_back(std::move(r));
    }
    Json shift = Json::array();
    for (const auto& v : t.shift)
        shift.push_back(rational_to_json(v));
    return Json{{"linear", std::move(linear)}, {"shift", std::move(shift)}, {"unique", t.unique}};
}

/// Report serialization; the elapsed time is deliberately left out so that reports
/// are reproducible byte for byte.
inline Json to_json(const VerificationReport& r)
{
    Json j{{"type", std::string(1, family_char(r.descriptor.type.family))},
           {"rank", r.descriptor.type.rank},
           {"weight", r.descriptor.lambda.coeffs()},
           {"status", to_string(r.status)},
           {"fflv_count", r.fflv_count},
           {"string_count", r.string_count},
           {"weyl_dim", r.weyl_dim},
           {"equal", r.equal},
           {"missing", to_json(r.missing)},
           {"extra", to_json(r.extra)},
           {"weight_twist", r.weight_twist ? to_json(*r.weight_twist) : Json(nullptr)},
           {"message", r.message}};
    if (r.twist_counterexample)
        j["twist_counterexample"] = Json{{"fflv_weight", r.twist_counterexample->first},
                                         {"string_weight", r.twist_counterexample->second}};
    if (r.mutation)
        j["mutation"] = Json{{"row", r.mutation->row}, {"col", r.mutation->col}, {"delta", r.mutation->delta}};
    return j;
}

inline Json to_json(const std::vector< VerificationReport >& reports)
{
    Json arr = Json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

/// Canonical text form: two-space indentation, keys sorted, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }
} // namespace fsl

#endif // FSL_IO_HPP
