#include <doctest.h>

#include <set>

#include "cqi/error.hpp"
#include "cqi/families.hpp"
#include "cqi/group.hpp"
#include "cqi/spec_text.hpp"
#include "helpers.hpp"

using namespace cqi;
using test::el;
using test::sig;

TEST_SUITE("group_core") {

TEST_CASE("normalize_signature sorts, merges and rejects") {
  CHECK(normalize_signature(2, {{5, 1}, {2, 1}}) == sig(2, {{2, 1}, {5, 1}}));
  CHECK(normalize_signature(3, {{2, 1}, {2, 2}}) == sig(3, {{2, 3}}));
  CHECK(normalize_signature(5, {{0, 3}, {1, 1}}) == sig(5, {{1, 1}}));
  try {
    normalize_signature(4, {{1, 1}});
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    normalize_signature(2, {{0, 1}});
    FAIL("expected EmptySignature");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySignature);
  }
  CHECK_THROWS_AS(PrimePowerSignature(2, {Part{3, 1}, Part{2, 1}}), Error);
}

TEST_CASE("signature shape helpers") {
  const auto s = sig(2, {{1, 2}, {3, 1}});
  CHECK(s.expanded_length() == 3);
  CHECK(std::vector<unsigned>(s.expanded_exponents().begin(), s.expanded_exponents().end()) ==
        std::vector<unsigned>{1, 1, 3});
  CHECK(s.block_of(2) == 1);
  CHECK(s.prefix_multiplicity(0) == 0);
  CHECK(s.prefix_multiplicity(2) == 3);
  CHECK(s.total_exponent() == 5);
  CHECK(s.candidate_space() == 16);
  // min(M_l, M_i) summed: 1+1+1 + 1+1+1 + 1+1+3 = 11
  CHECK(s.endomorphism_count() == big_pow(2, 11));
  CHECK(s.to_string() == "p=2: 2^2+8^1");
}

TEST_CASE("crt_decompose") {
  const auto d = crt_decompose(CompositeGroupSpec{{6, 12}});
  REQUIRE(d.size() == 2);
  CHECK(d.at(2) == sig(2, {{1, 1}, {2, 1}}));
  CHECK(d.at(3) == sig(3, {{1, 2}}));
  CHECK(crt_decompose(CompositeGroupSpec{{5}}).at(5) == sig(5, {{1, 1}}));
  CHECK(crt_decompose(CompositeGroupSpec{{1, 1}}).empty());
  CHECK(crt_decompose(CompositeGroupSpec{{360}}).size() == 3);
  CHECK_THROWS_AS(CompositeGroupSpec{{0}}.validate(), Error);
}

TEST_CASE("valuation") {
  CHECK(valuation(12, 2, 5) == 2);
  CHECK(valuation(0, 3, 4) == 4);
  CHECK(valuation(1, 3, 4) == 0);
  try {
    valuation(9, 3, 2);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("element_order_exponent") {
  const PrimePowerGroup g(sig(2, {{2, 1}, {5, 1}}));
  CHECK(element_order_exponent(el({0, 0}), g) == 0);
  CHECK(element_order_exponent(el({2, 2}), g) == 4);
  CHECK(element_order_exponent(el({1, 0}), g) == 2);
}

TEST_CASE("euler_phi_prime_power") {
  CHECK(euler_phi_prime_power(2, 0) == 1);
  CHECK(euler_phi_prime_power(3, 2) == 6);
  CHECK(euler_phi_prime_power(5, 1) == 4);
}

TEST_CASE("cyclic subgroup enumeration on small groups") {
  CHECK(enumerate_cyclic_subgroups(PrimePowerGroup(sig(3, {{1, 2}}))).size() == 5);
  CHECK(enumerate_cyclic_subgroups(PrimePowerGroup(sig(2, {{1, 1}, {2, 1}}))).size() == 6);
  for (unsigned r = 1; r <= 6; ++r) {
    CHECK(enumerate_cyclic_subgroups(PrimePowerGroup(sig(3, {{r, 1}}))).size() == r + 1);
    CHECK(count_cyclic_subgroups(sig(3, {{r, 1}})) == r + 1);
  }
  CHECK(count_cyclic_subgroups(sig(3, {{1, 2}})) == 5);
  CHECK(count_cyclic_subgroups(sig(2, {{1, 1}, {2, 1}})) == 6);

  const PrimePowerGroup g(sig(2, {{1, 1}, {2, 1}}));
  const auto subs = enumerate_cyclic_subgroups(g);
  std::size_t by_order[3] = {0, 0, 0};
  for (const auto& h : subs) ++by_order[h.u];
  CHECK(by_order[0] == 1);
  CHECK(by_order[1] == 3);
  CHECK(by_order[2] == 2);
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_cyclic_subgroups(PrimePowerGroup(sig(2, {{1, 5}})), 16);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("distinct subgroups have distinct element sets and lex-min generators") {
  for (const auto& s : signatures_up_to_order(2, 64)) {
    const PrimePowerGroup g(s);
    const auto& G = g.group();
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& h : enumerate_cyclic_subgroups(g)) {
      std::vector<std::uint64_t> elems;
      GroupElement x = G.zero();
      do {
        elems.push_back(G.index_of(x));
        x = G.add(x, h.generator);
      } while (x != G.zero());
      std::sort(elems.begin(), elems.end());
      CHECK(seen.insert(elems).second);
      // the generator is the smallest element of <h> with full order
      for (std::uint64_t idx : elems) {
        const GroupElement y = G.element_at(idx);
        if (G.element_order(y) == G.element_order(h.generator)) {
          CHECK(!(y < h.generator));
          break;
        }
      }
    }
    CHECK(count_cyclic_subgroups(s) == seen.size());
  }
}

TEST_CASE("census matches enumeration across small families") {
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& s : signatures_up_to_order(p, 3000))
      CHECK_MESSAGE(count_cyclic_subgroups(s) == enumerate_cyclic_subgroups(PrimePowerGroup(s)).size(),
                    s.to_string());
}

TEST_CASE("valuation_profile") {
  const auto s = sig(2, {{2, 1}, {5, 1}});
  const PrimePowerGroup g(s);
  const auto d = valuation_profile(describe_cyclic(el({2, 2}), g), s);
  CHECK(d == DeltaProfile({{1}, {4}}));
  CHECK(d.norm() == 4);
  CHECK(valuation_profile(describe_cyclic(el({0, 0}), g), s).is_zero());

  const auto s2 = sig(2, {{1, 1}, {2, 1}});
  CHECK(valuation_profile(describe_cyclic(el({0, 2}), PrimePowerGroup(s2)), s2) == DeltaProfile({{0}, {1}}));
}

TEST_CASE("DeltaProfile flat round trip and bounds") {
  const auto s = sig(3, {{1, 2}, {4, 1}});
  const std::vector<unsigned> flat{1, 0, 3};
  const auto d = DeltaProfile::from_flat(flat, s);
  CHECK(d.blocks().size() == 2);
  CHECK(d.flat() == flat);
  CHECK(d.block_norm(0) == 1);
  CHECK(d.fits(s));
  CHECK_FALSE(DeltaProfile({{2, 0}, {0}}).fits(s));
}

TEST_CASE("spec text grammar") {
  CHECK(std::get<CompositeGroupSpec>(parse_group_spec("Z(6)+Z(12)")).moduli == std::vector<std::uint64_t>{6, 12});
  CHECK(std::get<CompositeGroupSpec>(parse_group_spec(" Z( 6 ) + Z(12) ")).moduli ==
        std::vector<std::uint64_t>{6, 12});
  CHECK(std::get<PrimePowerSignature>(parse_group_spec("p=2: 4+32")) == sig(2, {{2, 1}, {5, 1}}));
  CHECK(std::get<PrimePowerSignature>(parse_group_spec("p=3: 9^2+3")) == sig(3, {{1, 1}, {2, 2}}));
  CHECK(std::get<PrimePowerSignature>(parse_group_spec(R"({"p":2,"parts":[[5,1],[2,1]]})")) ==
        sig(2, {{2, 1}, {5, 1}}));
  CHECK(std::get<CompositeGroupSpec>(parse_group_spec(R"({"moduli":[2,4]})")).moduli ==
        std::vector<std::uint64_t>{2, 4});
  CHECK(spec_to_string(parse_group_spec("Z(1)")) == "Z(1)");
  CHECK(spec_to_string(parse_group_spec("p=2: 2^1+4^1")) == "p=2: 2^1+4^1");

  for (const char* bad : {"", "Z(", "Z(6)+", "Z(6)Z(2)", "p=2 4", "p=2: 6", "{\"p\":2", "{\"p\":2}", "Q(3)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), Error);
  }
  try {
    parse_group_spec("Z(6)+Z(x)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  try {
    parse_group_spec("p=4: 4");
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
}

TEST_CASE("families") {
  const auto small = signatures_up_to_order(2, 4);
  REQUIRE(small.size() == 3);
  CHECK(small[0] == sig(2, {{1, 1}}));
  CHECK(small[1] == sig(2, {{1, 2}}));
  CHECK(small[2] == sig(2, {{2, 1}}));
  CHECK(signatures_up_to_order(2, 1).empty());

  std::size_t visited = 0;
  std::uint64_t last = 0;
  for_each_signature_by_candidate_space(3, 200, [&](const PrimePowerSignature& s, std::uint64_t c) {
    CHECK(s.candidate_space() == c);
    CHECK(c >= last);
    last = c;
    ++visited;
    return true;
  });
  CHECK(visited == count_signatures_by_candidate_space(200));

  const auto bounded = signatures_with_endomorphism_bound(2, big_pow(2, 12));
  for (const auto& s : bounded) CHECK(s.endomorphism_count() <= big_pow(2, 12));
  // |End(G)| >= |G|, so the order sweep contains every such signature
  std::size_t expected = 0;
  for (const auto& s : signatures_up_to_order(2, 1 << 12))
    if (s.endomorphism_count() <= big_pow(2, 12)) ++expected;
  CHECK(bounded.size() == expected);

  const auto specs = composite_specs_up_to(12);
  CHECK(specs.front().moduli.empty());
  for (const auto& s : specs) CHECK(s.order() <= 12);
}

}  // TEST_SUITE
