#include <doctest.h>

#include <set>

#include "cqi/counting.hpp"
#include "cqi/error.hpp"
#include "cqi/extension.hpp"
#include "cqi/families.hpp"
#include "helpers.hpp"

using namespace cqi;
using test::el;
using test::sig;

TEST_SUITE("extension") {

TEST_CASE("hom enumeration counts") {
  const auto s = sig(2, {{1, 1}, {2, 1}});
  const PrimePowerGroup g(s);
  CHECK(enumerate_homs(describe_cyclic(el({0, 0}), g), g).size() == 1);
  CHECK(enumerate_homs(describe_cyclic(el({0, 2}), g), g).size() == 4);
  CHECK(enumerate_homs(describe_cyclic(el({1, 0}), g), g).size() == 4);
  CHECK(hom_count(describe_cyclic(el({0, 1}), g), s) == 8);
  CHECK_THROWS_AS(make_hom(describe_cyclic(el({0, 2}), g), el({0, 1}), g), Error);
}

TEST_CASE("hom beta values") {
  const auto s = sig(2, {{2, 1}, {5, 1}});
  const PrimePowerGroup g(s);
  // <(2,2)> has u = 4; x = (2, 16): v(2) = 1 = β_1 + max(0, 2-4), v(16) = 4 = β_2 + 1
  const auto f = make_hom(describe_cyclic(el({2, 2}), g), el({2, 16}), g);
  CHECK(f.beta == std::vector<unsigned>{1, 3});
}

TEST_CASE("endomorphism stream sizes") {
  auto total = [](const PrimePowerSignature& s) {
    EndomorphismStream stream{PrimePowerGroup(s)};
    std::uint64_t n = 0;
    while (stream.next()) ++n;
    CHECK(n == stream.total());
    return n;
  };
  CHECK(total(sig(2, {{1, 1}, {2, 1}})) == 32);
  CHECK(total(sig(5, {{1, 1}})) == 5);
  CHECK(total(sig(2, {{2, 1}, {5, 1}})) == 2048);
  CHECK_THROWS_AS(EndomorphismStream(PrimePowerGroup(sig(2, {{2, 1}, {5, 1}})), 1000), Error);
}

TEST_CASE("streamed tables are homomorphisms") {
  const PrimePowerGroup g(sig(2, {{1, 1}, {2, 1}}));
  const auto& G = g.group();
  EndomorphismStream stream(g);
  while (stream.next()) {
    const auto& F = stream.current();
    for (std::uint64_t a = 0; a < G.order(); ++a)
      for (std::uint64_t b = 0; b < G.order(); ++b) {
        const auto x = G.element_at(a), y = G.element_at(b);
        CHECK(F.apply(G.add(x, y), G) == G.add(F.apply(x, G), F.apply(y, G)));
      }
  }
}

TEST_CASE("extension decisions on small examples") {
  const auto s = sig(2, {{1, 1}, {2, 1}});
  const PrimePowerGroup g(s);
  const auto h = describe_cyclic(el({0, 2}), g);
  const auto zero = make_hom(h, el({0, 0}), g);
  const auto bad = make_hom(h, el({1, 0}), g);
  const auto ident = make_hom(h, el({0, 2}), g);
  CHECK(is_extendable_oracle(zero, g));
  CHECK_FALSE(is_extendable_oracle(bad, g));
  CHECK(is_extendable_oracle(ident, g));
  CHECK(is_extendable_by_search(zero, g));
  CHECK_FALSE(is_extendable_by_search(bad, g));
  CHECK(is_extendable_by_search(ident, g));
  CHECK(is_extendable_formula(zero, s));
  CHECK_FALSE(is_extendable_formula(bad, s));
  CHECK(is_extendable_formula(ident, s));

  CHECK_FALSE(has_nonextendable_hom(describe_cyclic(el({0, 0}), g), s));
  CHECK(has_nonextendable_hom(h, s));
  for (std::uint64_t p : {2, 3, 5}) {
    const auto homo = sig(p, {{3, 2}});
    CHECK_FALSE(has_nonextendable_hom(describe_cyclic(el({1, 1}), PrimePowerGroup(homo)), homo));
  }
}

TEST_CASE("oracle endomorphism cap") {
  const auto s = sig(2, {{2, 1}, {5, 1}});
  const PrimePowerGroup g(s);
  const auto f = make_hom(describe_cyclic(el({0, 2}), g), el({0, 0}), g);
  try {
    is_extendable_oracle(f, g, 100);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("image set matches literal endomorphism search") {
  for (std::uint64_t p : {2, 3})
    for (const auto& s : signatures_with_endomorphism_bound(p, big_from_u64(1 << 12))) {
      const PrimePowerGroup g(s);
      for (const auto& h : enumerate_cyclic_subgroups(g)) {
        std::set<GroupElement> literal;
        EndomorphismStream stream(g);
        while (stream.next()) literal.insert(stream.current().apply(h.generator, g.group()));
        const ImageSet images(g.group(), h.generator);
        CHECK(images.size() == literal.size());
        for (const auto& x : literal) CHECK(images.contains(x));
      }
    }
}

TEST_CASE("formula agrees with oracle on small groups") {
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& s : signatures_with_endomorphism_bound(p, big_from_u64(1 << 16))) {
      const PrimePowerGroup g(s);
      std::uint64_t mismatches = 0;
      for (const auto& h : enumerate_cyclic_subgroups(g)) {
        const ImageSet images(g.group(), h.generator);
        for_each_hom_image(h, g, [&](const GroupElement& x) {
          if (images.contains(x) != is_extendable_formula(h, x, s)) ++mismatches;
        });
      }
      CHECK_MESSAGE(mismatches == 0, s.to_string());
    }
}

TEST_CASE("condition examples") {
  const auto s = sig(2, {{1, 1}, {2, 1}});
  CHECK_FALSE(condition1(DeltaProfile({{0}, {0}}), s));
  CHECK(condition1(DeltaProfile({{0}, {1}}), s));
  CHECK_FALSE(condition1(DeltaProfile({{1}, {2}}), s));
  CHECK_FALSE(condition2(DeltaProfile({{0}, {0}}), s));
  CHECK(condition2(DeltaProfile({{0}, {1}}), s));
  CHECK_FALSE(condition2(DeltaProfile({{1}, {2}}), s));

  const auto e = sig(2, {{2, 1}, {5, 1}});
  CHECK(f_delta(DeltaProfile({{1}, {4}}), e) == 1);
  CHECK(f_delta(DeltaProfile({{0}, {1}}), e) == 1);
  CHECK(f_delta(DeltaProfile({{1}, {2}, {2}}), sig(2, {{1, 1}, {2, 1}, {3, 1}})) == 2);
  CHECK(condition3(DeltaProfile({{0}, {1}}), e));
  CHECK_FALSE(condition3(DeltaProfile({{2}, {2}}), e));
  CHECK_FALSE(condition3(DeltaProfile({{0}, {0}}), e));
}

TEST_CASE("conditions 1, 2, 3 agree on small signatures") {
  for (const auto& s : signatures_up_to_order(2, 1 << 9)) {
    std::uint64_t mismatches = 0;
    for_each_candidate_profile(s, 1 << 20, [&](std::span<const unsigned> flat) {
      const auto d = DeltaProfile::from_flat(flat, s);
      const bool c1 = condition1(flat, s);
      if (c1 != condition2(d, s) || c1 != condition3(d, s)) ++mismatches;
    });
    CHECK_MESSAGE(mismatches == 0, s.to_string());
  }
}

TEST_CASE("membership in X depends only on the profile through condition 1") {
  for (const auto& s : signatures_up_to_order(3, 729)) {
    const PrimePowerGroup g(s);
    for (const auto& h : enumerate_cyclic_subgroups(g))
      CHECK(has_nonextendable_hom(h, s) == condition1(valuation_profile(h, s), s));
  }
}

}  // TEST_SUITE
