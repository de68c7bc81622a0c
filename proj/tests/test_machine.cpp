#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "refco/machine.hpp"

using namespace refco;

namespace {

State d(const Machine& m, int q, int i) {
    return m.next_state(state_from_bit(q), symbol_from_bit(i));
}
Symbol p(const Machine& m, int q, int i) {
    return m.output(state_from_bit(q), symbol_from_bit(i));
}

}  // namespace

TEST_CASE("decode 61 reproduces the published table") {
    const Machine m = decode(61);
    CHECK(d(m, 0, 0) == State::s0);
    CHECK(p(m, 0, 0) == Symbol::zero);
    CHECK(d(m, 0, 1) == State::s1);
    CHECK(p(m, 0, 1) == Symbol::one);
    CHECK(d(m, 1, 0) == State::s1);
    CHECK(p(m, 1, 0) == Symbol::one);
    CHECK(d(m, 1, 1) == State::s0);
    CHECK(p(m, 1, 1) == Symbol::one);
    CHECK(to_binary_string(61) == "00111101");
}

TEST_CASE("decode 45: outputs report the state") {
    const Machine m = decode(45);
    CHECK(p(m, 0, 0) == Symbol::zero);
    CHECK(p(m, 0, 1) == Symbol::zero);
    CHECK(p(m, 1, 0) == Symbol::one);
    CHECK(p(m, 1, 1) == Symbol::one);
    CHECK(d(m, 0, 0) == State::s0);
    CHECK(d(m, 0, 1) == State::s1);
    CHECK(d(m, 1, 0) == State::s1);
    CHECK(d(m, 1, 1) == State::s0);
    CHECK(to_binary_string(45) == "00101101");
}

TEST_CASE("decode 0 is the all-zero machine") {
    const Machine m = decode(0);
    for (int q = 0; q < 2; ++q) {
        for (int i = 0; i < 2; ++i) {
            CHECK(d(m, q, i) == State::s0);
            CHECK(p(m, q, i) == Symbol::zero);
        }
    }
}

TEST_CASE("encode inverts decode on all 256 ids") {
    for (int id = 0; id < 256; ++id) CHECK(encode(decode(id)) == id);
}

TEST_CASE("decode rejects out-of-range ids") {
    CHECK_THROWS_AS(decode(-1), std::domain_error);
    CHECK_THROWS_AS(decode(256), std::domain_error);
}

TEST_CASE("complement and mirror act as expected on 45") {
    CHECK(encode(complement(decode(45))) == 210);
    CHECK(encode(mirror(decode(45))) == 120);
}

TEST_CASE("complement, mirror, transpose are involutions; the two relabelings commute") {
    for (int id = 0; id < 256; ++id) {
        const Machine m = decode(id);
        CHECK(complement(complement(m)) == m);
        CHECK(mirror(mirror(m)) == m);
        CHECK(transpose(transpose(m)) == m);
        CHECK(mirror(complement(m)) == complement(mirror(m)));
    }
}

TEST_CASE("relabeling group is closed (Klein four-group)") {
    // Orbits of the four relabelings must themselves be closed under
    // further relabeling.
    for (int id = 0; id < 256; ++id) {
        const auto orbit = equivalence_class(id);
        for (int member : orbit) {
            for (int other : equivalence_class(member))
                CHECK(std::find(orbit.begin(), orbit.end(), other) !=
                      orbit.end());
        }
    }
}

TEST_CASE("published equivalence classes") {
    using V = std::vector<int>;
    CHECK(equivalence_class(7) == V{7, 47, 88, 218});
    CHECK(equivalence_class(44) == V{44, 104, 199, 214});
    CHECK(equivalence_class(45) == V{45, 120, 135, 210});
    CHECK(equivalence_class(54) == V{54, 99, 156, 201});
    CHECK(equivalence_class(60) == V{60, 105, 150, 195});
    CHECK(equivalence_class(61) == V{61, 121, 131, 146});
}

TEST_CASE("canonical representatives") {
    CHECK(canonical(210) == 45);
    CHECK(canonical(45) == 45);
    std::set<int> canon;
    for (int id = 0; id < 256; ++id) canon.insert(canonical(id));
    CHECK(canon.size() == 76);
    CHECK(canonical_ids().size() == 76);
}

TEST_CASE("transposition exchanges 45 and 54 and fixes 60") {
    CHECK(encode(transpose(decode(45))) == 54);
    CHECK(encode(transpose(decode(54))) == 45);
    CHECK(encode(transpose(decode(60))) == 60);
}

TEST_CASE("classification of the worked examples") {
    CHECK(classify(decode(45)) == MachineClass::state_reporting);
    CHECK(classify(decode(61)) == MachineClass::message_propagating);
    CHECK(classify(decode(0)) == MachineClass::constant_non_reporting);
}

TEST_CASE("classification counts match the combinatorial derivation") {
    std::map<MachineClass, int> counts;
    for (int id = 0; id < 256; ++id) ++counts[classify(decode(id))];

    // 16 transition tables combine freely with the output tables: 2 output
    // tables report the state with distinct constants, 2 are constant and
    // equal, and the remaining 12 depend on the input somewhere.
    CHECK(counts[MachineClass::state_reporting] == 16 * 2);
    CHECK(counts[MachineClass::message_propagating] == 16 * 12);
    CHECK(counts[MachineClass::constant_non_reporting] == 16 * 2);
}

TEST_CASE("parse_machine accepts ids, bit strings, and tables") {
    CHECK(parse_machine("45") == 45);
    CHECK(parse_machine(" 00101101 ") == 45);
    for (int id = 0; id < 256; ++id)
        CHECK(parse_machine(transition_table(id)) == id);
    CHECK_THROWS_AS(parse_machine("256"), std::domain_error);
    CHECK_THROWS_AS(parse_machine("0010110"), std::domain_error);
    CHECK_THROWS_AS(parse_machine("machine"), std::domain_error);
    CHECK_THROWS_AS(parse_machine(""), std::domain_error);
}
