#include <gtest/gtest.h>

#include "polybridge/algebra.hpp"
#include "polybridge/errors.hpp"
#include "polybridge/parser.hpp"
#include "polybridge/rename.hpp"
#include "support/generators.hpp"

using namespace polybridge;

namespace {

RenameErrorKind rename_error(const std::function<void()>& f) {
    try {
        f();
    } catch (const RenameError& err) {
        return err.kind();
    }
    ADD_FAILURE() << "no RenameError thrown";
    return RenameErrorKind::InvalidSpec;
}

}  // namespace

TEST(DefaultGreekMap, CoversBothCases) {
    RenameSpec spec = default_greek_map();
    EXPECT_EQ(spec.entries.size(), 48u);
    EXPECT_EQ(spec.source, RenameSource::Defaults);
    for (const auto& e : spec.entries) {
        EXPECT_TRUE(is_ascii_identifier(e.to)) << e.to;
    }
}

TEST(DefaultGreekMap, Examples) {
    RenameSpec spec = default_greek_map();
    EXPECT_EQ(renamed_symbol("β", spec), "beta");
    EXPECT_EQ(renamed_symbol("ω", spec), "omega");
    EXPECT_EQ(renamed_symbol("Ω", spec), "Omega");
    EXPECT_EQ(renamed_symbol("γ_b", spec), "gamma_b");
    EXPECT_EQ(renamed_symbol("Ωb", spec), "Omega_b");
    EXPECT_EQ(renamed_symbol("Ω_B", spec), "Omega_B");
    EXPECT_EQ(renamed_symbol("α2", spec), "alpha_2");
    EXPECT_EQ(renamed_symbol("Zx", spec), "Zx");
    EXPECT_EQ(renamed_symbol("xβ", spec), "xβ");
}

TEST(ApplyRenames, RenamesEverySymbol) {
    Expr e = parse("β x^2 + γ_b x + Ω_B");
    Expr out = apply_renames(e, default_greek_map());
    EXPECT_EQ(symbols_of(out), (std::vector<std::string>{"Omega_B", "beta", "gamma_b", "x"}));
    EXPECT_EQ(out, parse("beta x^2 + gamma_b x + Omega_B"));
}

TEST(ApplyRenames, CollisionIsReported) {
    Expr e = parse("β + beta");
    try {
        apply_renames(e, default_greek_map());
        FAIL();
    } catch (const RenameError& err) {
        EXPECT_EQ(err.kind(), RenameErrorKind::Collision);
        std::string msg = err.what();
        EXPECT_NE(msg.find("β"), std::string::npos);
        EXPECT_NE(msg.find("beta"), std::string::npos);
    }
    EXPECT_EQ(rename_error([] { apply_renames(parse("γb + γ_b"), default_greek_map()); }),
              RenameErrorKind::Collision);
}

TEST(ApplyRenames, NoCollisionWhenOnlyOneSideOccurs) {
    EXPECT_EQ(apply_renames(parse("beta + 1"), default_greek_map()), parse("beta + 1"));
}

TEST(ApplyRenames, IdempotentOnAsciiOutput) {
    RenameSpec spec = default_greek_map();
    for (std::string_view text : {"β x + γ", "Ω_B^2 - α β", "γ_b/(ζ + 1)"}) {
        Expr once = apply_renames(parse(text), spec);
        EXPECT_EQ(apply_renames(once, spec), once) << text;
    }
}

TEST(ApplyRenames, PreservesValueUnderRenamedAssignment) {
    testsupport::Rng rng(77);
    RenameSpec spec = default_greek_map();
    Expr e = parse("β x^2 - γ_b x/(Ω + 2) + α^3");
    for (int i = 0; i < 20; ++i) {
        Assignment before;
        Assignment after;
        for (const auto& name : symbols_of(e)) {
            mpq_class v = testsupport::random_rational(rng);
            before[name] = v;
            after[renamed_symbol(name, spec)] = v;
        }
        mpq_class expected;
        try {
            expected = eval_at(e, before);
        } catch (const AlgebraError&) {
            continue;
        }
        EXPECT_EQ(eval_at(apply_renames(e, spec), after), expected);
    }
}

TEST(RenameSpec, Validation) {
    EXPECT_EQ(rename_error([] { make_rename_spec({{"a", "b"}, {"a", "c"}}, RenameSource::InlineFlag); }),
              RenameErrorKind::InvalidSpec);
    EXPECT_EQ(rename_error([] { make_rename_spec({{"a", "β"}}, RenameSource::InlineFlag); }),
              RenameErrorKind::InvalidSpec);
    EXPECT_EQ(rename_error([] { make_rename_spec({{"a", "2b"}}, RenameSource::InlineFlag); }),
              RenameErrorKind::InvalidSpec);
    EXPECT_EQ(rename_error([] { make_rename_spec({{"a b", "c"}}, RenameSource::InlineFlag); }),
              RenameErrorKind::InvalidSpec);
}

TEST(RenameSpec, ParsePair) {
    EXPECT_EQ(parse_rename_pair("Zx=zx"), (RenameEntry{"Zx", "zx"}));
    EXPECT_EQ(parse_rename_pair("\\[Beta]=b"), (RenameEntry{"β", "b"}));
    EXPECT_EQ(parse_rename_pair(" γ_b = gb "), (RenameEntry{"γ_b", "gb"}));
    EXPECT_EQ(rename_error([] { parse_rename_pair("novalue"); }), RenameErrorKind::InvalidSpec);
    EXPECT_EQ(rename_error([] { parse_rename_pair("=x"); }), RenameErrorKind::InvalidSpec);
}

TEST(RenameSpec, ParseFile) {
    RenameSpec spec = parse_rename_file("# parameters\nZx=zx\n\nβ = b  # trailing comment\n");
    EXPECT_EQ(spec.source, RenameSource::UserFile);
    EXPECT_EQ(spec.entries, (std::vector<RenameEntry>{{"Zx", "zx"}, {"β", "b"}}));
}

TEST(RenameSpec, ParseFileErrorsNameTheLine) {
    try {
        parse_rename_file("a=b\n\nbroken line\n");
        FAIL();
    } catch (const RenameError& err) {
        EXPECT_EQ(err.kind(), RenameErrorKind::InvalidSpec);
        EXPECT_NE(std::string(err.what()).find("line 3"), std::string::npos) << err.what();
    }
}

TEST(RenameSpec, LaterLayersWin) {
    RenameSpec file = make_rename_spec({{"β", "b"}, {"Zx", "zx"}}, RenameSource::UserFile);
    RenameSpec inline_flags = make_rename_spec({{"Zx", "ZX"}}, RenameSource::InlineFlag);
    RenameSpec merged = layer_specs({default_greek_map(), file, inline_flags});
    EXPECT_EQ(renamed_symbol("β", merged), "b");
    EXPECT_EQ(renamed_symbol("Zx", merged), "ZX");
    EXPECT_EQ(renamed_symbol("γ", merged), "gamma");
    // A user entry for a single Greek letter also drives the head rule.
    EXPECT_EQ(renamed_symbol("β_1", merged), "b_1");
}

TEST(RenameSpec, ExactEntryBeatsHeadRule) {
    RenameSpec merged =
        layer_specs({default_greek_map(), make_rename_spec({{"γ_b", "gb"}}, RenameSource::InlineFlag)});
    EXPECT_EQ(renamed_symbol("γ_b", merged), "gb");
    EXPECT_EQ(renamed_symbol("γ_c", merged), "gamma_c");
}
