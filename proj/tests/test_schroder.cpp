#include "oracles.hpp"
#include "sandlab/core_asm.hpp"
#include "sandlab/error.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/toppling.hpp"

#include <doctest.h>

using namespace sandlab;

TEST_CASE("word validity") {
    CHECK(is_schroder("UHUDUHHDUDUDD"));
    CHECK_FALSE(is_schroder("DU"));
    CHECK_FALSE(is_schroder("UDDU"));
    CHECK(is_schroder(""));
    CHECK_THROWS_AS(SchroderWord("UDX"), ParseError);
    CHECK_THROWS_AS(SchroderWord("DU"), PreconditionError);
    SchroderWord w("UHUDUHHDUDUDD");
    CHECK(w.n() == 5);
    CHECK(w.d() == 3);
}

TEST_CASE("phi and its inverse") {
    CHECK(phi(SchroderWord("UHUDUHHDUDUDD")) == parse_configuration("7,6,5,2,1;5,4,4"));
    CHECK(phi(SchroderWord("UUDUDUHHDUDHD")) == parse_configuration("7,7,6,5,2;3,3,1"));
    CHECK(phi(SchroderWord("UD")) == parse_configuration("0"));
    CHECK(phi_inv(Shape(5, 3), parse_configuration("7,6,5,2,1;5,4,4")).str() == "UHUDUHHDUDUDD");
    CHECK(phi_inv(Shape(4, 5), parse_configuration("7,4,2,1;4,4,3,3,1")).str() == "HUHDHUHDUDUHD");
    CHECK(phi_inv(Shape(1, 0), parse_configuration("0")).str() == "UD");
    CHECK_THROWS_AS(phi_inv(Shape(2, 2), parse_configuration("2,2;1,1")), PreconditionError);
}

TEST_CASE("phi is a bijection onto sorted recurrent configurations") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            Shape s(n, d);
            auto words = oracle::schroder_words(n, d);
            auto rec = enumerate_sorted_recurrent(s);
            CHECK(words.size() == rec.size());
            for (const auto& w : words) {
                auto c = phi(SchroderWord(w));
                CHECK(is_recurrent(s, c));
                CHECK(phi_inv(s, c).str() == w);
            }
        }
    }
}

TEST_CASE("mirror") {
    CHECK(mirror(std::string("UHUDUHHDUDUDD")) == "UUDUDUHHDUDHD");
    CHECK(mirror(std::string("H")) == "H");
    CHECK(mirror(std::string("UD")) == "UD");
    for (const auto& w : oracle::schroder_words(3, 2)) {
        CHECK(mirror(mirror(w)) == w);
        CHECK(is_schroder(mirror(w)));
        CHECK(mirror(w) == oracle::mirror(w));
    }
}

TEST_CASE("area") {
    CHECK(area(SchroderWord("UHUDUHHDUDUDD")) == 9);
    CHECK(area(SchroderWord("UUDUDUHHDUDHD")) == 9);
    CHECK(area(SchroderWord("UUDD")) == 1);
    CHECK(area(SchroderWord("UUUDDD")) == 3);
    CHECK(area(SchroderWord("HH")) == 0);
    for (const auto& w : oracle::schroder_words(4, 3)) CHECK(area(SchroderWord(w)) == oracle::area(w));
}

TEST_CASE("collapse and Dyck bounce") {
    CHECK(collapse(SchroderWord("UHUDUHHDUDUDD")).str() == "UUDUDUDUDD");
    CHECK(collapse(SchroderWord("UUDD")).str() == "UUDD");
    CHECK(collapse(SchroderWord("HHH")).str().empty());
    auto b = dyck_bounce(collapse(SchroderWord("UHUDUHHDUDUDD")));
    CHECK(b.bounce == 4);
    CHECK(dyck_bounce(SchroderWord("UD")).bounce == 0);
    CHECK(dyck_bounce(SchroderWord("UUDD")).bounce == 0);
    CHECK(dyck_bounce(SchroderWord("UDUD")).bounce == 1);
}

TEST_CASE("Schroder bounce") {
    SchroderWord w("UHUDUHHDUDUDD");
    CHECK(schroder_bounce(w) == 8);
    CHECK(schroder_bounce_haglund(w) == 8);
    CHECK(schroder_bounce_loehr(w) == 8);
    CHECK(schroder_bounce_antidiagonal(w).bounce == 8);
    CHECK(schroder_bounce(SchroderWord("UUDUDUHHDUDHD")) == 6);
    CHECK(schroder_bounce(SchroderWord("UUUDDDHH")) == 0);
    for (int n = 0; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            if (n == 0 && d == 0) continue;
            for (const auto& s : oracle::schroder_words(n, d)) {
                SchroderWord x(s);
                int expect = oracle::bounce(s);
                CHECK(schroder_bounce_haglund(x) == expect);
                CHECK(schroder_bounce_loehr(x) == expect);
                CHECK(schroder_bounce_antidiagonal(x).bounce == expect);
            }
        }
    }
}

TEST_CASE("statistics match the sandpile side") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            Shape s(n, d);
            for (const auto& c : enumerate_sorted_recurrent(s)) {
                auto w = mirror(phi_inv(s, c));
                CHECK(area(w) == level(s, c));
                CHECK(schroder_bounce(w) == wtopple(topple_itc(s, c)) - (n + d));
            }
        }
    }
}

TEST_CASE("compress") {
    CHECK(compress(Shape(5, 4), parse_configuration("7,6,6,5,4;5,5,4,3")) == parse_configuration("4,4,4,3,3"));
    Shape k(3, 0);
    for (const auto& c : enumerate_sorted_recurrent(k)) CHECK(compress(k, c) == c);
    Shape s(2, 2);
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        std::string ud;
        for (char ch : phi_inv(s, c).str()) if (ch != 'H') ud.push_back(ch);
        CHECK(compress(s, c) == phi(SchroderWord(ud)));
        CHECK(is_recurrent(Shape(2, 0), compress(s, c)));
    }
}

TEST_CASE("word enumeration") {
    CHECK(enumerate_words(1, 0) == std::vector<std::string>{"UD", "DU"});
    CHECK(enumerate_words(2, 1).size() == 30);
    auto sw = enumerate_schroder_words(1, 0);
    REQUIRE(sw.size() == 1);
    CHECK(sw[0].str() == "UD");
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d) CHECK(enumerate_schroder_words(n, d).size() == oracle::schroder_words(n, d).size());
}

TEST_CASE("triangle order") {
    SchroderWord lo("UDUD"), hi("UUDD");
    CHECK(triangle_leq(lo, hi));
    CHECK_FALSE(triangle_leq(hi, lo));
    CHECK(triangle_leq(hi, hi));
}
