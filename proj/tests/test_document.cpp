#include <gtest/gtest.h>

#include "multinet/document.hpp"
#include "multinet/errors.hpp"

using namespace multinet;
using nlohmann::json;

namespace {

std::string schema_path(const std::string& text) {
    try {
        parse_document(text);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST(Document, CatalogRoundTrip) {
    for (const Multinet& m : {catalog::hasse(make_field(3)), catalog::monomial(make_field(4), 4), catalog::local(make_field(1), 4)}) {
        const auto doc = make_document(m);
        const std::string text = dump_canonical(to_json(doc));
        const auto back = parse_document(text);
        EXPECT_EQ(back.multinet, m);
        EXPECT_EQ(dump_canonical(to_json(back)), text);
    }
}

TEST(Document, InducedRoundTrip) {
    const QnArrangement qn(8, make_field(8));
    const auto im = restrict_to_plane(qn, example46_plane(qn.field()));
    const auto doc = make_document(im);
    EXPECT_EQ(doc.kind, "induced");
    EXPECT_EQ(doc.n, 8);
    const std::string text = dump_canonical(to_json(doc));
    const auto back = parse_document(text);
    EXPECT_EQ(back.plane, im.section.plane());
    EXPECT_EQ(back.multinet.blocks, im.blocks);
    EXPECT_EQ(dump_canonical(to_json(back)), text);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(json::parse(text).at("schema_version"), "1");
}

TEST(Document, SchemaErrorsCarryPointers) {
    const json good = to_json(make_document(catalog::local(make_field(1), 3)));
    EXPECT_EQ(schema_path("{not json"), "");
    json j = good;
    j["schema_version"] = "2";
    EXPECT_EQ(schema_path(j.dump()), "/schema_version");
    j = good;
    j["blocks"][1][0]["line"][2] = "z +";
    EXPECT_EQ(schema_path(j.dump()), "/blocks/1/0/line/2");
    j = good;
    j["blocks"][0][0]["mult"] = 0;
    EXPECT_EQ(schema_path(j.dump()), "/blocks/0/0/mult");
    j = good;
    j.erase("d");
    EXPECT_EQ(schema_path(j.dump()), "/d");
    j = good;
    j["N"] = "four";
    EXPECT_EQ(schema_path(j.dump()), "/N");
}

TEST(Document, ReportsSerializeExactly) {
    const QnArrangement qn(5, make_field(5));
    const PlaneP3 h = PlaneP3::from_integers(qn.field(), {1, -1, -1, 1});
    const json p = to_json(position_report(h, qn), qn);
    EXPECT_EQ(p.at("sameblock_lines").size(), 2u);
    const json c = to_json(classify_induced(restrict_to_plane(qn, h)));
    EXPECT_EQ(c.at("verdict"), "heavy");
    EXPECT_EQ(c.at("line_multiplicities").at("2"), 2);
    EXPECT_EQ(to_json(PointP2::from_integers(qn.field(), {2, 4, 6})), json::array({"1", "2", "3"}));
}
