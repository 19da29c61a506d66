#include "support/fixtures.hpp"

#include "simplicial/errors.hpp"
#include "simplicial/generator.hpp"
#include "simplicial/io.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

using namespace simplicial;

TEST(Io, ParsesFacetLists)
{
    const Complex c = io::parse_complex("0 1 2\n1 2 3\n");
    EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{4, 5, 2}));
    const Complex path = io::parse_complex("a b\nb,c\n# note\n\n");
    EXPECT_EQ(path.f_vector(), (std::vector<std::size_t>{3, 2}));
    const Complex absorbed = io::parse_complex("0 1 2\n0 1\n");
    EXPECT_EQ(absorbed.facets().size(), 1U);
}

TEST(Io, ParseErrorsCarryLineNumbers)
{
    try {
        io::parse_complex("0 1\n# fine\n0 0 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
    }
    EXPECT_THROW(io::parse_complex("# only comments\n\n"), EmptyComplexError);
}

TEST(Io, EmitListsSortedFacets)
{
    const Complex c = io::parse_complex("2 3 4\n0 1 2\n");
    EXPECT_EQ(io::emit_complex(c), "0 1 2\n2 3 4\n");
    EXPECT_EQ(io::emit_complex(c, {"hello"}), "# hello\n0 1 2\n2 3 4\n");
}

TEST(Io, RoundTripOnRandomComplexes)
{
    for (const Complex& c : fixtures::random_corpus(40, 505)) {
        const std::string text = io::emit_complex(c);
        EXPECT_EQ(io::emit_complex(io::parse_complex(text)), text);
    }
}

TEST(Io, DigestDependsOnFacets)
{
    EXPECT_EQ(io::complex_digest(fixtures::k_two()), io::complex_digest(io::parse_complex("1 2 3\n0 1 2\n")));
    EXPECT_NE(io::complex_digest(fixtures::k_two()), io::complex_digest(fixtures::k_bow()));
    EXPECT_EQ(io::complex_digest(fixtures::k_two()).size(), 16U);
}

TEST(Io, ReportJsonAndCsv)
{
    Report r;
    r.measure = "clustering";
    r.params = {{"q", "1"}};
    r.rows.push_back({"1-2", Value::of(Rational(2, 3))});
    r.rows.push_back({"far", Value::of(WalkLength::infinite())});
    Value flagged = Value::of(Rational(0));
    flagged.flag("degenerate").flag("zero_denominator");
    r.rows.push_back({"x", flagged});
    r.metadata = {{"note", "n"}};
    const Complex c = fixtures::k_clust4();

    const auto doc = nlohmann::json::parse(io::emit_report(r, c, io::Format::json));
    EXPECT_EQ(doc["measure"], "clustering");
    EXPECT_EQ(doc["complex_digest"], io::complex_digest(c));
    EXPECT_EQ(doc["values"][0]["exact"], "2/3");
    EXPECT_EQ(doc["values"][1]["value"], "inf");
    EXPECT_TRUE(doc["values"][1]["exact"].is_null());
    EXPECT_EQ(doc["values"][2]["flags"].size(), 2U);

    const std::string csv = io::emit_report(r, c, io::Format::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "simplex,value,exact,flags");
    EXPECT_NE(csv.find("1-2,0.6666666666666666,2/3,\n"), std::string::npos);
    EXPECT_NE(csv.find("far,inf,,\n"), std::string::npos);
    EXPECT_NE(csv.find("x,0,0,degenerate;zero_denominator\n"), std::string::npos);
    EXPECT_NE(csv.find("# note=n\n"), std::string::npos);
}

TEST(Io, MatrixDump)
{
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> m(2, 2);
    m << 2, -1, -1, 2;
    EXPECT_EQ(io::emit_matrix({"a", "b"}, m, io::Format::csv), "simplex,a,b\na,2,-1\nb,-1,2\n");
    const auto doc = nlohmann::json::parse(io::emit_matrix({"a", "b"}, m, io::Format::json));
    EXPECT_EQ(doc["matrix"][0][1], -1);
}

TEST(Generator, ExtremeProbabilities)
{
    generator::Config full{generator::Model::pure, 2, 4, 1.0, 7};
    EXPECT_EQ(generator::generate(full).f_vector(), (std::vector<std::size_t>{4, 6, 4}));
    generator::Config flag{generator::Model::flag, 0, 4, 1.0, 7};
    EXPECT_EQ(generator::generate(flag).f_vector(), (std::vector<std::size_t>{4, 6, 4, 1}));
    generator::Config empty{generator::Model::pure, 2, 5, 0.0, 7};
    EXPECT_THROW(generator::generate(empty), EmptyComplexError);
    generator::Config bad{generator::Model::pure, 2, 5, 1.5, 7};
    EXPECT_THROW(generator::generate(bad), ArgumentError);
}

TEST(Generator, SeededAndDescribed)
{
    generator::Config config{generator::Model::pure, 2, 8, 0.2, 99};
    EXPECT_EQ(io::emit_complex(generator::generate(config)), io::emit_complex(generator::generate(config)));
    config.seed = 100;
    const auto lines = generator::describe(config);
    ASSERT_EQ(lines.size(), 1U);
    EXPECT_NE(lines[0].find("pure-bernoulli v1"), std::string::npos);
    EXPECT_NE(lines[0].find("seed=100"), std::string::npos);
}

TEST(Generator, FlagModelKeepsIsolatedVertices)
{
    generator::Config config{generator::Model::flag, 0, 6, 0.0, 3};
    const Complex c = generator::generate(config);
    EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{6}));
}
